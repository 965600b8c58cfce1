#include "loclab/model.hpp"

#include <algorithm>

namespace loclab {

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  using Reason = PolygonError::Reason;
  const std::size_t n = vertices_.size();
  if (n < 3) throw PolygonError(Reason::too_few_vertices, "polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw PolygonError(Reason::repeated_vertex, "repeated vertex at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]) == 0) {
      throw PolygonError(Reason::collinear_consecutive,
                         "collinear consecutive vertices around index " + std::to_string(i));
    }
  }
  // Non-adjacent edges must be disjoint; adjacent ones can only share their
  // common endpoint because consecutive vertices are never collinear.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segmentsIntersect(edge(i), edge(j))) {
        throw PolygonError(Reason::non_simple, "non-simple polygon: edges " + std::to_string(i) +
                                                   " and " + std::to_string(j) + " intersect");
      }
    }
  }
  Scalar twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  signedArea_ = twice / 2;
}

Segment Polygon::edge(std::size_t i) const { return Segment(vertex(i), vertex(i + 1)); }

std::vector<Segment> Polygon::edges() const {
  std::vector<Segment> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(edge(i));
  return out;
}

Guard Guard::make(Point apex, Direction d1, Direction d2, bool reflex, std::string key) {
  Guard g{std::move(apex), std::move(d1), std::move(d2), reflex, std::move(key)};
  g.validate();
  return g;
}

Guard Guard::sweep(Point apex, Direction d1, Direction d2, std::string key) {
  const bool reflex = sign(cross(d1, d2)) < 0;
  return make(std::move(apex), std::move(d1), std::move(d2), reflex, std::move(key));
}

void Guard::validate() const {
  if (key.empty()) throw GeometryError("guard key must be nonempty");
  const int turn = sign(cross(d1, d2));
  if (turn == 0) {
    if (d1.sameAs(d2)) throw GeometryError("guard '" + key + "' has coincident boundary directions");
    if (reflex) throw GeometryError("guard '" + key + "': half-plane sectors are encoded with reflex=false");
    return;
  }
  if ((turn < 0) != reflex) {
    throw GeometryError("guard '" + key + "': reflex flag disagrees with the sweep from d1 to d2");
  }
}

bool sameSector(const Guard& a, const Guard& b) {
  return a.apex == b.apex && a.d1.sameAs(b.d1) && a.d2.sameAs(b.d2) && a.reflex == b.reflex;
}

Formula Formula::leaf(std::string key) {
  if (key.empty()) throw GeometryError("formula leaf needs a key");
  return Formula(Op::leaf, std::move(key), {});
}

Formula Formula::allOf(std::vector<Formula> children) {
  if (children.empty()) throw GeometryError("empty AND");
  return Formula(Op::all, {}, std::move(children));
}

Formula Formula::anyOf(std::vector<Formula> children) {
  if (children.empty()) throw GeometryError("empty OR");
  return Formula(Op::any, {}, std::move(children));
}

KeySet Formula::keys() const {
  KeySet out;
  if (op_ == Op::leaf) {
    out.insert(key_);
    return out;
  }
  for (const auto& c : children_) out.merge(c.keys());
  return out;
}

std::string Formula::toString() const {
  if (op_ == Op::leaf) return key_;
  std::string s = op_ == Op::all ? "and(" : "or(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += ",";
    s += children_[i].toString();
  }
  return s + ")";
}

bool evaluateFormula(const Formula& f, const KeySet& s) {
  return f.evaluateWith([&](const std::string& k) { return s.count(k) > 0; });
}

bool coneContains(const Guard& g, const Point& p) {
  if (p == g.apex) return true;
  const Vec v = p - g.apex;
  if (!g.reflex) return sign(cross(g.d1, v)) >= 0 && sign(cross(v, g.d2)) >= 0;
  // Complement of the open convex sector swept from d2 to d1.
  return !(sign(cross(g.d2, v)) > 0 && sign(cross(v, g.d1)) > 0);
}

Guard naturalGuard(const Polygon& poly, std::size_t v, AngleSide side, std::string key) {
  const std::size_t n = poly.size();
  if (v >= n) throw GeometryError("vertex index out of range");
  const Point& apex = poly.vertex(v);
  Direction toPrev = Direction::from(apex, poly.vertex(v + n - 1));
  Direction toNext = Direction::from(apex, poly.vertex(v + 1));
  // Interior lies left of each edge for a counterclockwise boundary, so the
  // internal angle sweeps from the outgoing edge to the incoming one.
  bool fromNext = poly.counterclockwise();
  if (side == AngleSide::external) fromNext = !fromNext;
  if (fromNext) return Guard::sweep(apex, toNext, toPrev, std::move(key));
  return Guard::sweep(apex, toPrev, toNext, std::move(key));
}

KeySet keySetAt(std::span<const Guard> guards, const Point& p) {
  KeySet out;
  for (const auto& g : guards) {
    if (coneContains(g, p)) out.insert(g.key);
  }
  return out;
}

Location pointInPolygon(const Polygon& poly, const Point& p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    if (onSegment(Segment(a, b), p)) return Location::boundary;
    // Half-open rule on y avoids double counting at vertices.
    if ((a.y > p.y) != (b.y > p.y)) {
      Scalar xCross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xCross) inside = !inside;
    }
  }
  return inside ? Location::inside : Location::outside;
}

bool coversEdge(const Guard& g, const Segment& e) {
  const Line l = e.line();
  return l == g.ray1().line() || l == g.ray2().line();
}

std::vector<std::size_t> uncoveredEdges(const Polygon& poly, std::span<const Guard> guards) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    if (std::none_of(guards.begin(), guards.end(), [&](const Guard& g) { return coversEdge(g, e); })) {
      out.push_back(i);
    }
  }
  return out;
}

GeneralPositionReport generalPositionReport(const Polygon& poly, std::span<const Segment> spikeEdges) {
  GeneralPositionReport report;
  std::vector<Line> lines;
  lines.reserve(spikeEdges.size());
  for (const auto& e : spikeEdges) lines.push_back(e.line());
  for (std::size_t j = 0; j < spikeEdges.size(); ++j) {
    for (std::size_t v = 0; v < poly.size(); ++v) {
      const Point& p = poly.vertex(v);
      if (p == spikeEdges[j].a() || p == spikeEdges[j].b()) continue;
      if (sideOfLine(lines[j], p) == 0) report.vertexOnEdgeLine.push_back({v, j});
    }
  }
  for (std::size_t j = 0; j < lines.size(); ++j) {
    for (std::size_t k = j + 1; k < lines.size(); ++k) {
      if (lines[j] == lines[k]) report.collinearEdges.push_back({j, k});
    }
  }
  return report;
}

}  // namespace loclab
