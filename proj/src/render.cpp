#include "loclab/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace loclab {

namespace {

using Ring = std::vector<Point>;

// Keeps the part of a convex ring where cross(dir, p - apex) >= 0.
Ring clipLeftOf(const Ring& ring, const Point& apex, const Direction& dir) {
  Ring out;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    const Scalar sp = cross(dir, p - apex);
    const Scalar sq = cross(dir, q - apex);
    if (sp >= 0) out.push_back(p);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      const Scalar t = sp / (sp - sq);
      out.push_back(Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

Ring viewportRing(const Viewport& v) {
  return {{v.xmin, v.ymin}, {v.xmax, v.ymin}, {v.xmax, v.ymax}, {v.xmin, v.ymax}};
}

std::vector<Ring> coneRings(const Guard& g, const Viewport& v) {
  const Ring box = viewportRing(v);
  std::vector<Ring> rings;
  if (g.reflex) {
    rings.push_back(clipLeftOf(box, g.apex, g.d1));
    rings.push_back(clipLeftOf(box, g.apex, g.d2.opposite()));
  } else {
    rings.push_back(clipLeftOf(clipLeftOf(box, g.apex, g.d1), g.apex, g.d2.opposite()));
  }
  std::erase_if(rings, [](const Ring& r) { return r.size() < 3; });
  return rings;
}

std::optional<std::pair<Point, Point>> clipLine(const Line& line, const Viewport& v) {
  std::vector<Point> hits;
  auto inside = [&](const Point& p) { return p.x >= v.xmin && p.x <= v.xmax && p.y >= v.ymin && p.y <= v.ymax; };
  if (!line.isVertical()) {
    for (const Scalar* x : {&v.xmin, &v.xmax}) hits.push_back({*x, line.yAt(*x)});
  }
  if (!line.isHorizontal()) {
    for (const Scalar* y : {&v.ymin, &v.ymax}) hits.push_back({line.xAt(*y), *y});
  }
  std::erase_if(hits, [&](const Point& p) { return !inside(p); });
  if (hits.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
  if (*lo == *hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

class Canvas {
 public:
  Canvas(const Viewport& v, int widthPx) : v_(v), scale_(Scalar(widthPx) / (v.xmax - v.xmin)) {}

  Scalar width() const { return (v_.xmax - v_.xmin) * scale_; }
  Scalar height() const { return (v_.ymax - v_.ymin) * scale_; }

  Scalar px(const Point& p) const { return (p.x - v_.xmin) * scale_; }
  Scalar py(const Point& p) const { return (v_.ymax - p.y) * scale_; }
  std::string x(const Point& p) const { return num(px(p)); }
  std::string y(const Point& p) const { return num(py(p)); }
  std::string xy(const Point& p) const { return x(p) + " " + y(p); }

  std::string path(const std::vector<Ring>& rings) const {
    std::string d;
    for (const auto& ring : rings) {
      for (std::size_t i = 0; i < ring.size(); ++i) d += (i == 0 ? "M " : " L ") + xy(ring[i]);
      d += " Z ";
    }
    if (!d.empty()) d.pop_back();
    return d;
  }

  // Nine significant digits, shortest %g form.
  static std::string num(const Scalar& s) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.9g", s.get_d());
    std::string out(buf.data());
    return out == "-0" ? "0" : out;
  }

 private:
  Viewport v_;
  Scalar scale_;
};

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

void checkViewport(const Scene& scene, const Viewport& v) {
  if (!(v.xmin < v.xmax) || !(v.ymin < v.ymax)) throw RenderError("viewport is empty");
  for (const auto& p : scene.polygon.vertices()) {
    if (p.x < v.xmin || p.x > v.xmax || p.y < v.ymin || p.y > v.ymax) {
      throw RenderError("viewport does not contain polygon vertex (" + formatScalar(p.x) + ", " +
                        formatScalar(p.y) + ")");
    }
  }
}

bool containsAll(const KeySet& big, const KeySet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Layer parseLayer(const std::string& name) {
  if (name == "polygon") return Layer::polygon;
  if (name == "cones") return Layer::cones;
  if (name == "cells") return Layer::cells;
  if (name == "witnesses") return Layer::witnesses;
  throw RenderError("unknown layer '" + name + "'");
}

Viewport fitViewport(const Scene& scene, const Scalar& pad) {
  std::vector<Point> pts = scene.polygon.vertices();
  for (const auto& g : scene.guards) pts.push_back(g.apex);
  Viewport v{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    v.xmin = std::min(v.xmin, p.x);
    v.xmax = std::max(v.xmax, p.x);
    v.ymin = std::min(v.ymin, p.y);
    v.ymax = std::max(v.ymax, p.y);
  }
  const Scalar extent = std::max(Scalar(v.xmax - v.xmin), Scalar(v.ymax - v.ymin));
  const Scalar margin = pad * extent;
  v.xmin -= margin;
  v.xmax += margin;
  v.ymin -= margin;
  v.ymax += margin;
  return v;
}

std::optional<WitnessPair> witnessPair(const Polygon& poly, std::span<const Guard> guards, const Decision& d) {
  if (d.localizable || !d.insideCell || !d.outsideCell) return std::nullopt;
  const Point& in = d.insideCell->representative;
  const Line horizontal(in, Direction(1, 0));

  std::vector<Scalar> xs;
  for (const auto& line : collectLines(poly, guards)) {
    if (line == horizontal || line.isHorizontal()) continue;
    xs.push_back(line.xAt(in.y));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Scalar> samples;
  if (xs.empty()) {
    samples = {in.x - 1, in.x + 1};
  } else {
    samples.push_back(xs.front() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) samples.push_back((xs[i] + xs[i + 1]) / 2);
    samples.push_back(xs.back() + 1);
  }

  std::optional<Point> best;
  for (const auto& x : samples) {
    Point p{x, in.y};
    if (pointInPolygon(poly, p) != Location::outside) continue;
    if (!containsAll(keySetAt(guards, p), d.insideCell->keySet)) continue;
    if (!best || abs(p.x - in.x) < abs(best->x - in.x)) best = p;
  }
  return WitnessPair{best ? *best : d.outsideCell->representative, in};
}

std::string renderSVG(const Scene& scene, const RenderSpec& spec) {
  const Viewport& v = spec.viewport;
  checkViewport(scene, v);
  if (spec.widthPx <= 0) throw RenderError("width must be positive");
  const Canvas c(v, spec.widthPx);
  const auto has = [&](Layer l) { return spec.layers.count(l) > 0; };

  std::ostringstream out;
  const std::string w = Canvas::num(c.width());
  const std::string h = Canvas::num(c.height());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

  if (has(Layer::cells)) {
    out << "<g class=\"cells\" stroke=\"#999999\" stroke-width=\"0.5\" stroke-dasharray=\"3 3\">\n";
    for (const auto& line : collectLines(scene.polygon, scene.guards)) {
      auto seg = clipLine(line, v);
      if (!seg) continue;
      out << "<line class=\"cell-boundary\" x1=\"" << c.x(seg->first) << "\" y1=\"" << c.y(seg->first) << "\" x2=\""
          << c.x(seg->second) << "\" y2=\"" << c.y(seg->second) << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (has(Layer::cones)) {
    out << "<g class=\"cones\" fill-opacity=\"0.18\" stroke-opacity=\"0.6\" stroke-width=\"0.75\">\n";
    for (std::size_t i = 0; i < scene.guards.size(); ++i) {
      const Guard& g = scene.guards[i];
      const std::string d = c.path(coneRings(g, v));
      if (d.empty()) continue;
      const char* colour = kPalette[i % kPalette.size()];
      out << "<path class=\"cone\" data-key=\"" << g.key << "\" fill=\"" << colour << "\" stroke=\"" << colour
          << "\" fill-rule=\"nonzero\" d=\"" << d << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (has(Layer::polygon)) {
    out << "<path class=\"polygon\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" d=\""
        << c.path({scene.polygon.vertices()}) << "\"/>\n";
    for (const auto& g : scene.guards) {
      out << "<circle class=\"apex\" cx=\"" << c.x(g.apex) << "\" cy=\"" << c.y(g.apex)
          << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    }
  }

  if (has(Layer::witnesses)) {
    out << "<g class=\"witnesses\">\n";
    for (const auto& pair : spec.witnesses) {
      const Point corner{pair.inside.x, pair.outside.y};
      out << "<line class=\"witness-link\" x1=\"" << c.x(pair.outside) << "\" y1=\"" << c.y(pair.outside)
          << "\" x2=\"" << c.x(corner) << "\" y2=\"" << c.y(corner) << "\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
      if (!(corner == pair.inside)) {
        out << "<line class=\"witness-drop\" x1=\"" << c.x(corner) << "\" y1=\"" << c.y(corner) << "\" x2=\""
            << c.x(pair.inside) << "\" y2=\"" << c.y(pair.inside)
            << "\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"2 2\"/>\n";
      }
      out << "<circle class=\"witness-outside\" cx=\"" << c.x(pair.outside) << "\" cy=\"" << c.y(pair.outside)
          << "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
      out << "<rect class=\"witness-inside\" x=\"" << Canvas::num(c.px(pair.inside) - 4) << "\" y=\""
          << Canvas::num(c.py(pair.inside) - 4) << "\" width=\"8\" height=\"8\" fill=\"#2ca02c\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace loclab
