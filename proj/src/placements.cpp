#include "loclab/placements.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>

namespace loclab {

Solution certify(const Polygon& poly, std::vector<Guard> guards, SolutionKind kind, Execution exec) {
  if (kind == SolutionKind::vertex) {
    for (const auto& g : guards) {
      const auto& vs = poly.vertices();
      if (std::find(vs.begin(), vs.end(), g.apex) == vs.end()) {
        throw GeometryError("vertex solution guard '" + g.key + "' is not at a polygon vertex");
      }
    }
  }
  if (auto missing = uncoveredEdges(poly, guards); !missing.empty()) {
    throw PlacementError("edge " + std::to_string(missing.front()) + " is not covered by any guard", Verdict{});
  }
  const CellLabeling lab = labelScene(poly, guards, exec);
  Formula f = synthesizeDNF(lab);
  Verdict v = verifyLocalization(poly, guards, f, exec);
  if (!v.ok) throw PlacementError("synthesized formula failed verification", std::move(v));
  return Solution{std::move(guards), std::move(f), kind};
}

std::vector<Guard> vertexPlacement(const SpikePolygon& sp) {
  std::vector<Guard> guards;
  const int m = sp.m();
  for (int i = 1; i <= m; ++i) guards.push_back(tipGuard(sp, i, "t" + std::to_string(i)));
  // Quadrant right of the tip line and below the tread separates the
  // exterior/interior pair flanking tip guard i.
  for (int i = 1; i < m; ++i) {
    guards.push_back(Guard::sweep(sp.right(i), Direction(0, -1), Direction(1, 0), "r" + std::to_string(i)));
  }
  const Direction closing = Direction::from(sp.left(1), sp.right(m));
  guards.push_back(Guard::sweep(sp.left(1), closing, closing.opposite(), "l1"));
  return guards;
}

Solution vertexSolution(const SpikePolygon& sp, Execution exec) {
  return certify(sp.polygon(), vertexPlacement(sp), SolutionKind::vertex, exec);
}

namespace {

Line leftEdgeLine(const SpikePolygon& sp, int i) { return Line::through(sp.left(i), sp.tip(i)); }
Line rightEdgeLine(const SpikePolygon& sp, int i) { return Line::through(sp.tip(i), sp.right(i)); }
Line treadLine(const SpikePolygon& sp, int i) { return Line::through(sp.right(i), sp.left(i + 1)); }

Point meet(const Line& a, const Line& b) {
  auto hit = intersectLines(a, b);
  if (hit.kind != LineIntersection::Kind::point) throw GeometryError("placement lines are parallel");
  return *hit.point;
}

}  // namespace

// Every guard's two rays lie along two distinct edge lines:
//   closing edge + L_1 at l_1;
//   for j <= pairs: V_j + L_{2j} (apex below t_j) and T_j + L_{2j+1};
//   V_j + T_j at r_j for the remaining j < m;
//   L_m + V_m at t_m.
// With pairs = m/2 - 1 (even m) each edge line is used exactly once.
std::vector<Guard> generalPlacement(const SpikePolygon& sp) {
  const int m = sp.m();
  const int pairs = m % 2 == 0 ? m / 2 - 1 : m / 2;
  const Direction up(0, 1), left(-1, 0), right(1, 0);
  const Direction spikeEdge = Direction::from(sp.left(1), sp.tip(1));
  const Direction closing = Direction::from(sp.left(1), sp.right(m));

  std::vector<Guard> guards;
  auto key = [&] { return "g" + std::to_string(guards.size() + 1); };
  guards.push_back(Guard::sweep(sp.left(1), closing, spikeEdge, key()));
  for (int j = 1; j <= pairs; ++j) {
    guards.push_back(Guard::sweep(meet(rightEdgeLine(sp, j), leftEdgeLine(sp, 2 * j)), up, spikeEdge, key()));
    guards.push_back(Guard::sweep(meet(treadLine(sp, j), leftEdgeLine(sp, 2 * j + 1)), left, spikeEdge, key()));
  }
  for (int j = pairs + 1; j < m; ++j) guards.push_back(Guard::sweep(sp.right(j), up, right, key()));
  guards.push_back(tipGuard(sp, m, key()));
  return guards;
}

Solution generalSolution(const SpikePolygon& sp, Execution exec) {
  return certify(sp.polygon(), generalPlacement(sp), SolutionKind::general, exec);
}

std::vector<Guard> enumerateCanonicalGuards(const Polygon& poly) {
  std::vector<Guard> out;
  const std::size_t n = poly.size();
  for (std::size_t v = 0; v < n; ++v) {
    const Point& apex = poly.vertex(v);
    std::vector<Direction> dirs;
    auto add = [&](Direction d) {
      if (std::none_of(dirs.begin(), dirs.end(), [&](const Direction& e) { return e.sameAs(d); })) {
        dirs.push_back(std::move(d));
      }
    };
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) add(Direction::from(apex, poly.vertex(u)));
    }
    add(Direction::from(poly.vertex(v + n - 1), apex));
    add(Direction::from(poly.vertex(v + 1), apex));
    for (std::size_t a = 0; a < dirs.size(); ++a) {
      for (std::size_t b = 0; b < dirs.size(); ++b) {
        if (a == b) continue;
        out.push_back(Guard::sweep(apex, dirs[a], dirs[b], "g" + std::to_string(out.size())));
      }
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Candidate cones sampled on the arrangement of every candidate boundary line
// and every edge. That arrangement refines the one of any subset, so a
// subset's inside/outside key-set relation can be read off these cells.
struct SearchSpace {
  std::vector<Guard> candidates;
  std::vector<std::uint64_t> covers;             // edge bitmask per candidate
  std::vector<std::vector<char>> contains;       // [candidate][cell]
  std::vector<char> inside;                      // per cell
  std::uint64_t allEdges = 0;
  int maxCover = 0;
};

SearchSpace buildSearchSpace(const Polygon& poly, Execution exec) {
  if (poly.size() > 64) throw GeometryError("vertex guard search supports at most 64 edges");
  SearchSpace s;
  s.candidates = enumerateCanonicalGuards(poly);
  const auto edges = poly.edges();
  s.allEdges = poly.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << poly.size()) - 1;

  s.covers.resize(s.candidates.size());
  for (std::size_t c = 0; c < s.candidates.size(); ++c) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (coversEdge(s.candidates[c], edges[e])) s.covers[c] |= std::uint64_t{1} << e;
    }
    s.maxCover = std::max(s.maxCover, std::popcount(s.covers[c]));
  }

  const auto lines = collectLines(poly, s.candidates);
  const auto cells = enumerateCells(lines, exec);
  s.inside.resize(cells.size());
  s.contains.assign(s.candidates.size(), std::vector<char>(cells.size()));
  forEachIndex(cells.size(), exec, [&](std::size_t i) {
    const Point& p = cells[i].representative;
    s.inside[i] = pointInPolygon(poly, p) == Location::inside;
    for (std::size_t c = 0; c < s.candidates.size(); ++c) s.contains[c][i] = coneContains(s.candidates[c], p);
  });
  return s;
}

// Monotone realizability for a subset: no inside key mask may be a submask
// of an outside key mask.
bool subsetLocalizes(const SearchSpace& s, const std::vector<std::size_t>& subset, std::vector<char>& seenIn,
                     std::vector<char>& coveredOut) {
  const std::size_t masks = std::size_t{1} << subset.size();
  std::fill(seenIn.begin(), seenIn.begin() + masks, 0);
  std::fill(coveredOut.begin(), coveredOut.begin() + masks, 0);
  for (std::size_t cell = 0; cell < s.inside.size(); ++cell) {
    std::size_t m = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (s.contains[subset[j]][cell]) m |= std::size_t{1} << j;
    }
    (s.inside[cell] ? seenIn : coveredOut)[m] = 1;
  }
  for (std::size_t o = masks; o-- > 0;) {
    if (!coveredOut[o]) continue;
    for (std::size_t sub = o; sub; sub = (sub - 1) & o) coveredOut[sub] = 1;
    coveredOut[0] = 1;
  }
  for (std::size_t m = 0; m < masks; ++m) {
    if (seenIn[m] && coveredOut[m]) return false;
  }
  return true;
}

struct SubtreeResult {
  std::optional<std::vector<std::size_t>> first;
  std::size_t decided = 0;
  bool timedOut = false;
};

class SubsetWalker {
 public:
  SubsetWalker(const SearchSpace& s, int k, Clock::time_point deadline, std::atomic<bool>& stop)
      : s_(s), k_(k), deadline_(deadline), stop_(stop), seenIn_(std::size_t{1} << k), coveredOut_(std::size_t{1} << k) {}

  SubtreeResult run(std::size_t first) {
    chosen_.assign(1, first);
    walk(first + 1, s_.allEdges & ~s_.covers[first]);
    return std::move(result_);
  }

 private:
  void walk(std::size_t start, std::uint64_t uncovered) {
    if (result_.timedOut) return;
    const int remaining = k_ - static_cast<int>(chosen_.size());
    if (remaining == 0) {
      if (uncovered) return;
      if ((++ticks_ & 0x3ff) == 0 && (stop_.load(std::memory_order_relaxed) || Clock::now() > deadline_)) {
        stop_.store(true, std::memory_order_relaxed);
        result_.timedOut = true;
        return;
      }
      ++result_.decided;
      if (subsetLocalizes(s_, chosen_, seenIn_, coveredOut_) && !result_.first) result_.first = chosen_;
      return;
    }
    if (std::popcount(uncovered) > remaining * s_.maxCover) return;
    for (std::size_t c = start; c < s_.candidates.size(); ++c) {
      chosen_.push_back(c);
      walk(c + 1, uncovered & ~s_.covers[c]);
      chosen_.pop_back();
      if (result_.timedOut) return;
    }
  }

  const SearchSpace& s_;
  int k_;
  Clock::time_point deadline_;
  std::atomic<bool>& stop_;
  std::vector<std::size_t> chosen_;
  std::vector<char> seenIn_, coveredOut_;
  SubtreeResult result_;
  std::size_t ticks_ = 0;
};

}  // namespace

SearchReport minVertexGuards(const Polygon& poly, int kmax, std::chrono::duration<double> budget, Execution exec) {
  if (kmax < 1 || kmax > 16) throw GeometryError("kmax must lie in [1, 16]");
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
  const SearchSpace space = buildSearchSpace(poly, exec);

  SearchReport report;
  report.kmax = kmax;
  report.candidateCount = space.candidates.size();
  std::atomic<bool> stop{false};

  for (int k = 1; k <= kmax; ++k) {
    std::vector<SubtreeResult> parts(space.candidates.size());
    forEachIndex(space.candidates.size(), exec, [&](std::size_t first) {
      if (stop.load(std::memory_order_relaxed) || Clock::now() > deadline) {
        stop.store(true, std::memory_order_relaxed);
        parts[first].timedOut = true;
        return;
      }
      SubsetWalker walker(space, k, deadline, stop);
      parts[first] = walker.run(first);
    });

    std::optional<std::vector<std::size_t>> best;
    bool timedOut = false;
    for (auto& p : parts) {
      report.subsetsDecided += p.decided;
      timedOut = timedOut || p.timedOut;
      if (!best && p.first) best = p.first;
    }
    if (best) {
      std::vector<Guard> guards;
      for (auto c : *best) guards.push_back(space.candidates[c]);
      report.bestFound = certify(poly, std::move(guards), SolutionKind::vertex, exec);
      report.exhaustive = !timedOut;
      return report;
    }
    if (timedOut) {
      report.exhaustive = false;
      return report;
    }
    report.infeasibleSizes.push_back(k);
  }
  return report;
}

}  // namespace loclab
