#include "loclab/geometry.hpp"

#include <cctype>

namespace loclab {

namespace {

bool isIntegerText(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parseInteger(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Scalar parseScalar(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!isIntegerText(s)) throw GeometryError("malformed scalar '" + std::string(text) + "'");
    return Scalar(parseInteger(s));
  }
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!isIntegerText(num) || !isIntegerText(den) || den.front() == '-') {
    throw GeometryError("malformed scalar '" + std::string(text) + "'");
  }
  BigInt d = parseInteger(den);
  if (d == 0) throw GeometryError("zero denominator in '" + std::string(text) + "'");
  Scalar q(parseInteger(num), d);
  q.canonicalize();
  return q;
}

std::string formatScalar(const Scalar& s) { return s.get_str(10); }

Direction::Direction(Scalar dx, Scalar dy) : v_{std::move(dx), std::move(dy)} {
  if (v_.x == 0 && v_.y == 0) throw GeometryError("zero direction");
}

bool Direction::sameAs(const Direction& other) const {
  return cross(v_, other.v_) == 0 && dot(v_, other.v_) > 0;
}

std::pair<BigInt, BigInt> Direction::primitive() const {
  BigInt den = lcm(v_.x.get_den(), v_.y.get_den());
  BigInt x = v_.x.get_num() * (den / v_.x.get_den());
  BigInt y = v_.y.get_num() * (den / v_.y.get_den());
  BigInt g = gcd(x, y);
  return {x / g, y / g};
}

Line::Line(const Point& anchor, const Direction& dir) {
  // Normal (dy, -dx); c = a*x0 + b*y0.
  Scalar a = dir.dy();
  Scalar b = -dir.dx();
  Scalar c = a * anchor.x + b * anchor.y;
  BigInt den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  BigInt ia = a.get_num() * (den / a.get_den());
  BigInt ib = b.get_num() * (den / b.get_den());
  BigInt ic = c.get_num() * (den / c.get_den());
  BigInt g = gcd(gcd(ia, ib), ic);
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  a_ = std::move(ia);
  b_ = std::move(ib);
  c_ = std::move(ic);
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError("line through coincident points");
  return Line(p, Direction::from(p, q));
}

Point Line::anchor() const {
  if (b_ != 0) return {Scalar(0), Scalar(c_) / Scalar(b_)};
  return {Scalar(c_) / Scalar(a_), Scalar(0)};
}

Direction Line::direction() const { return Direction(Scalar(b_), Scalar(-a_)); }

Scalar Line::yAt(const Scalar& x) const {
  if (b_ == 0) throw GeometryError("yAt on vertical line");
  return (Scalar(c_) - Scalar(a_) * x) / Scalar(b_);
}

Scalar Line::xAt(const Scalar& y) const {
  if (a_ == 0) throw GeometryError("xAt on horizontal line");
  return (Scalar(c_) - Scalar(b_) * y) / Scalar(a_);
}

std::string Line::toString() const {
  std::string out;
  auto term = [&out](const BigInt& coeff, char var) {
    if (coeff == 0) return;
    const bool first = out.empty();
    if (coeff < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const BigInt mag = abs(coeff);
    if (mag != 1) out += mag.get_str();
    out += var;
  };
  term(a_, 'x');
  term(b_, 'y');
  return out + " = " + c_.get_str();
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw GeometryError("degenerate segment");
}

int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(b - a, c - a)); }

LineIntersection intersectLines(const Line& l1, const Line& l2) {
  BigInt det = l1.a() * l2.b() - l1.b() * l2.a();
  if (det == 0) {
    if (l1 == l2) return {LineIntersection::Kind::identical, std::nullopt};
    return {LineIntersection::Kind::parallel, std::nullopt};
  }
  Scalar x(BigInt(l1.c() * l2.b() - l1.b() * l2.c()), det);
  Scalar y(BigInt(l1.a() * l2.c() - l1.c() * l2.a()), det);
  x.canonicalize();
  y.canonicalize();
  return {LineIntersection::Kind::point, Point{std::move(x), std::move(y)}};
}

bool rayContains(const Ray& r, const Point& p) {
  Vec v = p - r.origin;
  return cross(r.dir.vec(), v) == 0 && dot(r.dir.vec(), v) >= 0;
}

int sideOfLine(const Line& l, const Point& p) {
  Scalar v = Scalar(l.a()) * p.x + Scalar(l.b()) * p.y - Scalar(l.c());
  return sign(v);
}

bool onSegment(const Segment& s, const Point& p) {
  if (orient(s.a(), s.b(), p) != 0) return false;
  return dot(p - s.a(), p - s.b()) <= 0;
}

bool segmentsIntersect(const Segment& s, const Segment& t) {
  int o1 = orient(s.a(), s.b(), t.a());
  int o2 = orient(s.a(), s.b(), t.b());
  int o3 = orient(t.a(), t.b(), s.a());
  int o4 = orient(t.a(), t.b(), s.b());
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return onSegment(s, t.a()) || onSegment(s, t.b()) || onSegment(t, s.a()) || onSegment(t, s.b());
}

}  // namespace loclab
