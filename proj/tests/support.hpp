#pragma once

// Test-only helpers: random small-integer scenes and a dense-grid oracle
// that re-derives inside/outside and key sets with plain int64 arithmetic,
// sharing no code with the library's predicates.

#include "loclab/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace loclab::testkit {

struct IPoint {
  std::int64_t x, y;
};

struct RandomScene {
  Polygon polygon;
  std::vector<Guard> guards;
  std::vector<IPoint> vertices;
  // Guard data in integer form for the oracle: apex, d1, d2, reflex.
  struct IGuard {
    IPoint apex, d1, d2;
    bool reflex;
  };
  std::vector<IGuard> iguards;
};

enum class SceneFamily {
  octilinear,   // every line is x = c, y = c or x +- y = c with integer c
  smallSlope,   // direction components in [-2, 2]
};

inline std::int64_t icross(IPoint u, IPoint v) { return u.x * v.y - u.y * v.x; }

namespace detail {

inline const std::vector<std::vector<IPoint>>& octilinearShapes() {
  static const std::vector<std::vector<IPoint>> shapes{
      {{0, 0}, {2, 0}, {2, 2}, {0, 2}},
      {{0, 0}, {2, 0}, {0, 2}},
      {{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}},
      {{1, 0}, {2, 1}, {1, 2}, {0, 1}},
      {{0, 0}, {3, 0}, {2, 1}, {1, 1}},
      {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}},
      {{0, 0}, {4, 0}, {2, 2}},
      {{0, 0}, {2, 2}, {0, 4}, {-2, 2}},
  };
  return shapes;
}

inline std::vector<IPoint> randomSmallPolygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, 3), count(3, 4);
  for (;;) {
    const int n = count(rng);
    std::vector<IPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    std::vector<Point> p;
    for (const auto& q : pts) p.push_back({Scalar(q.x), Scalar(q.y)});
    try {
      Polygon poly(p);
      return pts;
    } catch (const GeometryError&) {
    }
  }
}

}  // namespace detail

// Builds a random scene with at most `maxLines` distinct supporting lines.
// About a third of the scenes use natural guards so that localizable
// instances are common.
inline RandomScene randomScene(std::mt19937_64& rng, SceneFamily family, std::size_t maxLines = 8) {
  for (;;) {
    std::vector<IPoint> verts;
    std::vector<IPoint> dirs;
    if (family == SceneFamily::octilinear) {
      const auto& shapes = detail::octilinearShapes();
      verts = shapes[rng() % shapes.size()];
      const std::int64_t dx = static_cast<std::int64_t>(rng() % 3), dy = static_cast<std::int64_t>(rng() % 3);
      for (auto& v : verts) v = {v.x + dx, v.y + dy};
      if (rng() % 2) std::reverse(verts.begin(), verts.end());
      dirs = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    } else {
      verts = detail::randomSmallPolygon(rng);
      for (int x = -2; x <= 2; ++x) {
        for (int y = -2; y <= 2; ++y) {
          if ((x || y) && std::gcd(x, y) == 1) dirs.push_back({x, y});
        }
      }
    }
    std::vector<Point> pv;
    for (const auto& v : verts) pv.push_back({Scalar(v.x), Scalar(v.y)});
    Polygon poly(pv);

    RandomScene scene{poly, {}, verts, {}};
    const bool natural = rng() % 3 == 0;
    const bool everyVertex = natural && rng() % 2 == 0;
    const int guardCount = everyVertex ? static_cast<int>(poly.size()) : 1 + static_cast<int>(rng() % 3);
    std::uniform_int_distribution<int> apexCoord(-1, 4);
    for (int g = 0; g < guardCount; ++g) {
      const std::string key = "k" + std::to_string(g + 1);
      if (natural) {
        const std::size_t v = everyVertex ? static_cast<std::size_t>(g) : rng() % poly.size();
        const AngleSide side = !everyVertex && rng() % 4 == 0 ? AngleSide::external : AngleSide::internal;
        scene.guards.push_back(naturalGuard(poly, v, side, key));
      } else {
        const IPoint apex{apexCoord(rng), apexCoord(rng)};
        IPoint d1 = dirs[rng() % dirs.size()], d2 = dirs[rng() % dirs.size()];
        if (icross(d1, d2) == 0 && d1.x * d2.x + d1.y * d2.y > 0) continue;
        scene.guards.push_back(Guard::sweep({Scalar(apex.x), Scalar(apex.y)}, Direction(Scalar(d1.x), Scalar(d1.y)),
                                            Direction(Scalar(d2.x), Scalar(d2.y)), key));
      }
    }
    if (scene.guards.empty()) continue;
    // Integer mirror of every guard for the oracle.
    bool integral = true;
    for (const auto& g : scene.guards) {
      auto toI = [&](const Scalar& s) {
        if (s.get_den() != 1 || !s.get_num().fits_slong_p()) integral = false;
        return static_cast<std::int64_t>(s.get_num().get_si());
      };
      scene.iguards.push_back({{toI(g.apex.x), toI(g.apex.y)},
                               {toI(g.d1.dx()), toI(g.d1.dy())},
                               {toI(g.d2.dx()), toI(g.d2.dy())},
                               g.reflex});
    }
    if (!integral) continue;
    if (collectLines(poly, scene.guards).size() > maxLines) continue;
    return scene;
  }
}

// Dense rational grid over a box containing every pairwise intersection of
// the scene's lines. Grid points on a line are skipped.
class GridOracle {
 public:
  struct Sample {
    std::uint32_t keys;
    bool inside;
  };

  GridOracle(const RandomScene& scene, std::int64_t stepsPerUnit) : scene_(scene), scale_(16 * stepsPerUnit) {
    buildLines();
    box();
    sample(stepsPerUnit);
  }

  // Distinct (key mask, inside) pairs seen on the grid.
  const std::set<std::pair<std::uint32_t, bool>>& classes() const { return classes_; }
  std::size_t signVectorCount() const { return signVectors_.size(); }
  std::size_t pointsTested() const { return tested_; }

  // Formula agrees with inside/outside at every grid point.
  bool verify(const Formula& f) const {
    for (const auto& [mask, inside] : classes_) {
      auto contains = [&](const std::string& key) {
        for (std::size_t g = 0; g < scene_.guards.size(); ++g) {
          if (scene_.guards[g].key == key) return ((mask >> g) & 1u) != 0;
        }
        return false;
      };
      if (f.evaluateWith(contains) != inside) return false;
    }
    return true;
  }

  // No inside key mask is a submask of an outside key mask.
  bool decide() const {
    for (const auto& [in, inside] : classes_) {
      if (!inside) continue;
      for (const auto& [out, outside] : classes_) {
        if (!outside && (in & out) == in) return false;
      }
    }
    return true;
  }

 private:
  struct ILine {
    IPoint anchor, dir;  // integer anchor, integer direction
  };

  void buildLines() {
    const auto& v = scene_.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const IPoint a = v[i], b = v[(i + 1) % v.size()];
      lines_.push_back({a, {b.x - a.x, b.y - a.y}});
    }
    for (const auto& g : scene_.iguards) {
      lines_.push_back({g.apex, g.d1});
      lines_.push_back({g.apex, g.d2});
    }
  }

  void box() {
    double lo = 0, hi = 0;
    bool first = true;
    auto take = [&](double x, double y) {
      if (first) {
        lo = std::min(x, y);
        hi = std::max(x, y);
        first = false;
      }
      lo = std::min({lo, x, y});
      hi = std::max({hi, x, y});
    };
    for (const auto& l : lines_) take(double(l.anchor.x), double(l.anchor.y));
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      for (std::size_t j = i + 1; j < lines_.size(); ++j) {
        const auto& p = lines_[i];
        const auto& q = lines_[j];
        const std::int64_t den = icross(p.dir, q.dir);
        if (den == 0) continue;
        const IPoint diff{q.anchor.x - p.anchor.x, q.anchor.y - p.anchor.y};
        const double t = double(icross(diff, q.dir)) / double(den);
        take(double(p.anchor.x) + t * double(p.dir.x), double(p.anchor.y) + t * double(p.dir.y));
      }
    }
    lo_ = static_cast<std::int64_t>(std::floor(lo)) - 2;
    hi_ = static_cast<std::int64_t>(std::ceil(hi)) + 2;
  }

  // Side of the integer line at the grid point (px, py) / scale_.
  std::int64_t side(const ILine& l, std::int64_t px, std::int64_t py) const {
    return icross(l.dir, {px - l.anchor.x * scale_, py - l.anchor.y * scale_});
  }

  // Counterclockwise angular order from d: quadrant-free comparison by half
  // planes relative to d.
  static int halfOf(IPoint d, IPoint v) {
    const std::int64_t c = icross(d, v), dd = d.x * v.x + d.y * v.y;
    return (c > 0 || (c == 0 && dd > 0)) ? 0 : 1;
  }
  static bool angleLessEq(IPoint d, IPoint u, IPoint v) {
    const int hu = halfOf(d, u), hv = halfOf(d, v);
    if (hu != hv) return hu < hv;
    return icross(u, v) >= 0;
  }

  bool inCone(const RandomScene::IGuard& g, std::int64_t px, std::int64_t py) const {
    const IPoint v{px - g.apex.x * scale_, py - g.apex.y * scale_};
    if (v.x == 0 && v.y == 0) return true;
    // Sweep angle from d1 to v must not exceed the sweep from d1 to d2.
    return angleLessEq(g.d1, v, g.d2);
  }

  bool insidePolygon(std::int64_t px, std::int64_t py) const {
    // Winding number; the point is never on the boundary here.
    int wn = 0;
    const auto& v = scene_.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const IPoint a{v[i].x * scale_, v[i].y * scale_};
      const IPoint b{v[(i + 1) % v.size()].x * scale_, v[(i + 1) % v.size()].y * scale_};
      const std::int64_t turn = icross({b.x - a.x, b.y - a.y}, {px - a.x, py - a.y});
      if (a.y <= py) {
        if (b.y > py && turn > 0) ++wn;
      } else if (b.y <= py && turn < 0) {
        --wn;
      }
    }
    return wn != 0;
  }

  void sample(std::int64_t stepsPerUnit) {
    const std::int64_t step = scale_ / stepsPerUnit;  // 16
    for (std::int64_t gx = lo_ * stepsPerUnit; gx <= hi_ * stepsPerUnit; ++gx) {
      for (std::int64_t gy = lo_ * stepsPerUnit; gy <= hi_ * stepsPerUnit; ++gy) {
        const std::int64_t px = gx * step + 2, py = gy * step + 1;
        std::vector<bool> signs;
        bool onLine = false;
        for (const auto& l : lines_) {
          const std::int64_t s = side(l, px, py);
          if (s == 0) {
            onLine = true;
            break;
          }
          signs.push_back(s > 0);
        }
        if (onLine) continue;
        ++tested_;
        std::uint32_t mask = 0;
        for (std::size_t g = 0; g < scene_.iguards.size(); ++g) {
          if (inCone(scene_.iguards[g], px, py)) mask |= 1u << g;
        }
        classes_.insert({mask, insidePolygon(px, py)});
        signVectors_.insert(std::move(signs));
      }
    }
  }

  const RandomScene& scene_;
  std::int64_t scale_;
  std::vector<ILine> lines_;
  std::int64_t lo_ = 0, hi_ = 0;
  std::set<std::pair<std::uint32_t, bool>> classes_;
  std::set<std::vector<bool>> signVectors_;
  std::size_t tested_ = 0;
};

}  // namespace loclab::testkit
