#pragma once

// Exact rational kernel: scalars, points, directions, lines, rays, segments
// and the sign predicates built on them. Nothing in here rounds.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loclab {

using Scalar = mpq_class;
using BigInt = mpz_class;

/// Thrown for values that violate a type invariant (zero direction,
/// degenerate segment, malformed scalar text, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "-1", "5/41", "  7 " into a canonical rational.
Scalar parseScalar(std::string_view text);
/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string formatScalar(const Scalar& s);

inline int sign(const Scalar& s) { return sgn(s); }

struct Vec {
  Scalar x;
  Scalar y;

  friend bool operator==(const Vec&, const Vec&) = default;
};

inline Scalar cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Vec& v) { return {p.x + v.x, p.y + v.y}; }

/// Nonzero direction vector. Equivalence is up to positive scaling; the
/// opposite direction is a different direction.
class Direction {
 public:
  Direction(Scalar dx, Scalar dy);
  explicit Direction(const Vec& v) : Direction(v.x, v.y) {}
  static Direction from(const Point& from, const Point& to) { return Direction(to - from); }

  const Scalar& dx() const { return v_.x; }
  const Scalar& dy() const { return v_.y; }
  const Vec& vec() const { return v_; }
  Direction opposite() const { return Direction(-v_.x, -v_.y); }

  /// Same ray direction (positive multiple).
  bool sameAs(const Direction& other) const;

  /// Smallest integer vector pointing the same way; the canonical
  /// representative of the equivalence class.
  std::pair<BigInt, BigInt> primitive() const;

  /// Raw component equality; use sameAs for the equivalence relation.
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Vec v_;
};

inline Scalar cross(const Direction& u, const Direction& v) { return cross(u.vec(), v.vec()); }
inline Scalar cross(const Direction& u, const Vec& v) { return cross(u.vec(), v); }
inline Scalar cross(const Vec& u, const Direction& v) { return cross(u, v.vec()); }

/// Supporting line in canonical form a*x + b*y = c: integer coefficients
/// with gcd(a, b, c) = 1 and the first nonzero of (a, b) positive.
/// Coincident lines compare equal regardless of how they were built.
class Line {
 public:
  Line(const Point& anchor, const Direction& dir);
  static Line through(const Point& p, const Point& q);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  bool isVertical() const { return b_ == 0; }
  bool isHorizontal() const { return a_ == 0; }
  /// A point on the line.
  Point anchor() const;
  /// Direction (b, -a) along the line.
  Direction direction() const;
  /// y on the line at abscissa x. Requires !isVertical().
  Scalar yAt(const Scalar& x) const;
  /// x on the line at ordinate y. Requires !isHorizontal().
  Scalar xAt(const Scalar& y) const;

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator<(const Line& l, const Line& r) {
    if (l.a_ != r.a_) return l.a_ < r.a_;
    if (l.b_ != r.b_) return l.b_ < r.b_;
    return l.c_ < r.c_;
  }

  std::string toString() const;

 private:
  Line(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  BigInt a_, b_, c_;
};

struct Ray {
  Point origin;
  Direction dir;

  Line line() const { return Line(origin, dir); }
};

class Segment {
 public:
  Segment(Point a, Point b);
  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  Line line() const { return Line::through(a_, b_); }
  Segment reversed() const { return Segment(b_, a_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_, b_;
};

/// Sign of (b - a) x (c - a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& a, const Point& b, const Point& c);

struct LineIntersection {
  enum class Kind { point, parallel, identical };
  Kind kind;
  std::optional<Point> point;
};

LineIntersection intersectLines(const Line& l1, const Line& l2);

/// p = origin + t * dir for some t >= 0.
bool rayContains(const Ray& r, const Point& p);

/// Sign of a*x + b*y - c under the canonical coefficients.
int sideOfLine(const Line& l, const Point& p);

/// Closed-segment membership.
bool onSegment(const Segment& s, const Point& p);

/// Closed segments share at least one point.
bool segmentsIntersect(const Segment& s, const Segment& t);

}  // namespace loclab
