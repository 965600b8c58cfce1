#include "loclab/spike.hpp"

namespace loclab {

void SpikeParams::validate() const {
  if (m < 2) throw GeometryError("spike polygon needs m >= 2 (got " + std::to_string(m) + ")");
  if (!(delta > 0)) throw GeometryError("spike polygon needs delta > 0");
  if (!(delta < h)) throw GeometryError("spike polygon needs delta < h");
  if (!(h < w)) throw GeometryError("spike polygon needs h < w");
}

std::string VertexRole::tag() const {
  const char c = role == SpikeRole::base_left ? 'l' : role == SpikeRole::tip ? 't' : 'r';
  return std::string(1, c) + std::to_string(spike);
}

VertexRole VertexRole::parse(const std::string& tag) {
  if (tag.size() < 2) throw GeometryError("bad role tag '" + tag + "'");
  SpikeRole role;
  switch (tag[0]) {
    case 'l':
      role = SpikeRole::base_left;
      break;
    case 't':
      role = SpikeRole::tip;
      break;
    case 'r':
      role = SpikeRole::base_right;
      break;
    default:
      throw GeometryError("bad role tag '" + tag + "'");
  }
  int idx = 0;
  for (std::size_t k = 1; k < tag.size(); ++k) {
    if (tag[k] < '0' || tag[k] > '9') throw GeometryError("bad role tag '" + tag + "'");
    idx = idx * 10 + (tag[k] - '0');
  }
  if (idx < 1) throw GeometryError("bad role tag '" + tag + "'");
  return {role, idx};
}

SpikePolygon::SpikePolygon(SpikeParams params, Polygon polygon)
    : params_(std::move(params)), polygon_(std::move(polygon)) {
  if (polygon_.size() != static_cast<std::size_t>(params_.n())) {
    throw GeometryError("spike polygon vertex count does not match m");
  }
}

std::vector<VertexRole> SpikePolygon::roles() const {
  std::vector<VertexRole> out;
  for (int i = 1; i <= m(); ++i) {
    out.push_back({SpikeRole::base_left, i});
    out.push_back({SpikeRole::tip, i});
    out.push_back({SpikeRole::base_right, i});
  }
  return out;
}

std::vector<std::string> SpikePolygon::roleTags() const {
  std::vector<std::string> out;
  for (const auto& r : roles()) out.push_back(r.tag());
  return out;
}

SpikePolygon buildSpikePolygon(const SpikeParams& p) {
  p.validate();
  const Scalar& w = p.w;
  const Scalar& h = p.h;
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.m; ++i) {
    const Scalar x = (i - 1) * w;
    const Scalar base = (i - 1) * h;
    v.push_back({x - p.delta, base - h});
    v.push_back({x, base + h / 2});
    v.push_back({x, i < p.m ? base : Scalar(base - h)});
  }
  return SpikePolygon(p, Polygon(std::move(v)));
}

SpikePolygon recognizeSpikePolygon(const Polygon& poly, const std::vector<std::string>& roleTags) {
  if (poly.size() % 3 != 0 || poly.size() < 6) throw GeometryError("not a spike polygon: vertex count");
  const int m = static_cast<int>(poly.size() / 3);
  if (roleTags.size() != poly.size()) throw GeometryError("role count does not match vertex count");
  for (int i = 1; i <= m; ++i) {
    const std::size_t k = 3 * static_cast<std::size_t>(i - 1);
    if (VertexRole::parse(roleTags[k]) != VertexRole{SpikeRole::base_left, i} ||
        VertexRole::parse(roleTags[k + 1]) != VertexRole{SpikeRole::tip, i} ||
        VertexRole::parse(roleTags[k + 2]) != VertexRole{SpikeRole::base_right, i}) {
      throw GeometryError("roles must run l1,t1,r1,...,lm,tm,rm");
    }
  }
  const Point& l1 = poly.vertex(0);
  const Point& t1 = poly.vertex(1);
  const Point& r1 = poly.vertex(2);
  const Point& t2 = poly.vertex(4);
  SpikeParams params{m, t2.x - t1.x, r1.y - l1.y, r1.x - l1.x};
  params.validate();
  SpikePolygon sp = buildSpikePolygon(params);
  // Rebuilt coordinates are relative to t_1 at (0, h/2); accept a translated copy.
  const Vec shift = t1 - sp.tip(1);
  std::vector<Point> moved;
  for (const auto& q : sp.polygon().vertices()) moved.push_back(q + shift);
  if (moved != poly.vertices()) throw GeometryError("polygon does not match the spike construction for its roles");
  return SpikePolygon(params, poly);
}

std::vector<Segment> spikeEdges(const SpikePolygon& sp) {
  std::vector<Segment> out;
  for (int i = 1; i <= sp.m(); ++i) {
    out.emplace_back(sp.left(i), sp.tip(i));
    out.emplace_back(sp.tip(i), sp.right(i));
  }
  return out;
}

Guard tipGuard(const SpikePolygon& sp, int i, std::string key) {
  if (i < 1 || i > sp.m()) throw GeometryError("spike index out of range");
  return naturalGuard(sp.polygon(), sp.tipIndex(i), AngleSide::internal, std::move(key));
}

std::pair<Point, Point> sampleABPair(const SpikePolygon& sp, int i, const Scalar& offset) {
  if (i < 1 || i >= sp.m()) throw GeometryError("A/B pair needs 1 <= i < m");
  if (!(offset > 0) || !(offset < sp.params().delta / 4)) throw GeometryError("A/B offset must lie in (0, delta/4)");
  const Scalar y = (sp.left(i).y + sp.right(i).y) / 2;
  const Scalar xLeft = Line::through(sp.left(i), sp.tip(i)).xAt(y);
  Point a{xLeft - offset, y};
  Point b{sp.tip(i).x + offset, y};
  // A steep closing edge (w near delta) can cut through the sample row.
  if (pointInPolygon(sp.polygon(), a) != Location::outside || pointInPolygon(sp.polygon(), b) != Location::inside) {
    throw GeometryError("closing edge cuts the A/B sample row of spike " + std::to_string(i));
  }
  return {std::move(a), std::move(b)};
}

}  // namespace loclab
