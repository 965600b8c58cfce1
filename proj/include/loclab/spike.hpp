#pragma once

// The m-spike staircase polygon used for the vertex-guard lower bound.
//
// Spike i (1-based) has base-left vertex l_i, tip t_i and base-right vertex
// r_i; the boundary runs l_1 t_1 r_1 ... l_m t_m r_m and the edge r_m l_1
// closes it:
//
//   t_i = ((i-1)w, (i-1)h + h/2)
//   l_i = ((i-1)w - delta, (i-2)h)
//   r_i = ((i-1)w, (i-1)h)    for i < m
//   r_m = ((m-1)w, (m-2)h)
//
// so t_i r_i is vertical of height h/2 (1.5h for the last spike), r_i l_{i+1}
// is horizontal, and the closing edge passes just below every l_i, i >= 2.

#include "loclab/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace loclab {

struct SpikeParams {
  int m = 2;
  Scalar w;
  Scalar h;
  Scalar delta;

  /// Throws GeometryError naming the violated inequality.
  void validate() const;
  int n() const { return 3 * m; }
};

enum class SpikeRole { base_left, tip, base_right };

struct VertexRole {
  SpikeRole role;
  int spike;  // 1-based

  std::string tag() const;  // "l3", "t3", "r3"
  static VertexRole parse(const std::string& tag);
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

class SpikePolygon {
 public:
  SpikePolygon(SpikeParams params, Polygon polygon);

  const SpikeParams& params() const { return params_; }
  const Polygon& polygon() const { return polygon_; }
  int m() const { return params_.m; }

  /// Vertex indices into polygon().vertices(), i in [1, m].
  std::size_t leftIndex(int i) const { return 3 * static_cast<std::size_t>(i - 1); }
  std::size_t tipIndex(int i) const { return leftIndex(i) + 1; }
  std::size_t rightIndex(int i) const { return leftIndex(i) + 2; }

  const Point& left(int i) const { return polygon_.vertex(leftIndex(i)); }
  const Point& tip(int i) const { return polygon_.vertex(tipIndex(i)); }
  const Point& right(int i) const { return polygon_.vertex(rightIndex(i)); }

  std::vector<VertexRole> roles() const;
  std::vector<std::string> roleTags() const;

 private:
  SpikeParams params_;
  Polygon polygon_;
};

SpikePolygon buildSpikePolygon(const SpikeParams& params);

/// Recovers the parameters from a polygon carrying l/t/r role tags and checks
/// that rebuilding from them reproduces the polygon exactly.
SpikePolygon recognizeSpikePolygon(const Polygon& poly, const std::vector<std::string>& roleTags);

/// The 2m edges incident to tips, in boundary order.
std::vector<Segment> spikeEdges(const SpikePolygon& sp);

/// Natural internal guard at t_i (cone between t_i->l_i and t_i->r_i).
Guard tipGuard(const SpikePolygon& sp, int i, std::string key);

/// Exterior/interior sample pair flanking the tip guard of spike i at
/// mid-height between l_i and r_i: a sits `offset` left of the guard's left
/// boundary line, b sits `offset` right of x(t_i). Requires 1 <= i < m and
/// 0 < offset < delta/4. Throws GeometryError when the closing edge leaves b
/// outside the polygon, which happens only for w close to delta.
std::pair<Point, Point> sampleABPair(const SpikePolygon& sp, int i, const Scalar& offset);

}  // namespace loclab
