#pragma once

// The wireless localization model: polygons, guards broadcasting a key in an
// angular sector, monotone AND/OR formulas over keys, and edge covering.

#include "loclab/geometry.hpp"

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace loclab {

class PolygonError : public GeometryError {
 public:
  enum class Reason { too_few_vertices, repeated_vertex, collinear_consecutive, non_simple };
  PolygonError(Reason reason, const std::string& what) : GeometryError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Simple polygon in the orientation given. Construction validates
/// simplicity, vertex count and that no three consecutive vertices are
/// collinear.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge from vertex i to vertex i+1 (cyclic).
  Segment edge(std::size_t i) const;
  std::vector<Segment> edges() const;
  const Scalar& signedArea() const { return signedArea_; }
  bool counterclockwise() const { return signedArea_ > 0; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point> vertices_;
  Scalar signedArea_;
};

/// A station at `apex` whose broadcast sector sweeps counterclockwise from
/// d1 to d2, boundary rays included. Width is in (0, pi] when !reflex and in
/// (pi, 2pi) when reflex; a half-plane is d2 = -d1 with reflex = false.
struct Guard {
  Point apex;
  Direction d1;
  Direction d2;
  bool reflex = false;
  std::string key;

  /// Builds and validates; the reflex flag must agree with the sweep.
  static Guard make(Point apex, Direction d1, Direction d2, bool reflex, std::string key);
  /// Builds the sector swept counterclockwise from d1 to d2 and infers the
  /// reflex flag.
  static Guard sweep(Point apex, Direction d1, Direction d2, std::string key);

  /// Throws GeometryError if the directions and flag are inconsistent.
  void validate() const;

  Ray ray1() const { return {apex, d1}; }
  Ray ray2() const { return {apex, d2}; }
};

bool sameSector(const Guard& a, const Guard& b);

using KeySet = std::set<std::string>;

/// Monotone formula over guard keys: leaf, AND or OR; never negated.
class Formula {
 public:
  enum class Op { leaf, all, any };

  static Formula leaf(std::string key);
  static Formula allOf(std::vector<Formula> children);
  static Formula anyOf(std::vector<Formula> children);

  Op op() const { return op_; }
  const std::string& key() const { return key_; }
  const std::vector<Formula>& children() const { return children_; }

  /// Every key referenced by a leaf.
  KeySet keys() const;
  std::string toString() const;

  template <class Contains>
  bool evaluateWith(const Contains& contains) const {
    switch (op_) {
      case Op::leaf:
        return contains(key_);
      case Op::all:
        for (const auto& c : children_) {
          if (!c.evaluateWith(contains)) return false;
        }
        return true;
      case Op::any:
        for (const auto& c : children_) {
          if (c.evaluateWith(contains)) return true;
        }
        return false;
    }
    return false;
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Op op, std::string key, std::vector<Formula> children)
      : op_(op), key_(std::move(key)), children_(std::move(children)) {}
  Op op_;
  std::string key_;
  std::vector<Formula> children_;
};

bool evaluateFormula(const Formula& f, const KeySet& s);

/// Closed-sector membership; the apex belongs to every cone.
bool coneContains(const Guard& g, const Point& p);

enum class AngleSide { internal, external };

/// Guard at vertex v broadcasting exactly its internal or external angle.
Guard naturalGuard(const Polygon& poly, std::size_t v, AngleSide side, std::string key);

KeySet keySetAt(std::span<const Guard> guards, const Point& p);

enum class Location { inside, outside, boundary };

Location pointInPolygon(const Polygon& poly, const Point& p);

/// Segment lies on the supporting line of one of g's boundary rays.
bool coversEdge(const Guard& g, const Segment& e);

/// Indices of polygon edges no guard covers.
std::vector<std::size_t> uncoveredEdges(const Polygon& poly, std::span<const Guard> guards);

struct VertexEdgeViolation {
  std::size_t vertex;
  std::size_t edge;  // index into the spike edge list
  friend bool operator==(const VertexEdgeViolation&, const VertexEdgeViolation&) = default;
};

struct EdgePairViolation {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const EdgePairViolation&, const EdgePairViolation&) = default;
};

struct GeneralPositionReport {
  std::vector<VertexEdgeViolation> vertexOnEdgeLine;
  std::vector<EdgePairViolation> collinearEdges;

  bool empty() const { return vertexOnEdgeLine.empty() && collinearEdges.empty(); }
};

/// Lists every vertex lying on a non-incident spike edge's supporting line
/// and every pair of spike edges sharing a supporting line.
GeneralPositionReport generalPositionReport(const Polygon& poly, std::span<const Segment> spikeEdges);

}  // namespace loclab
