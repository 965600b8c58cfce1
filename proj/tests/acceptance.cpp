// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "loclab/bounds.hpp"
#include "loclab/placements.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace loclab;
using namespace std::chrono_literals;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Scenes that some criterion decided localizable; criterion 9 re-checks
// each one's synthesized formula.
struct LocalizableScene {
  std::string origin;
  Polygon polygon;
  std::vector<Guard> guards;
};
std::vector<LocalizableScene> g_localizable;

void remember(std::string origin, const Polygon& poly, const std::vector<Guard>& guards) {
  g_localizable.push_back({std::move(origin), poly, guards});
}

SpikePolygon spike(int m, Scalar w, Scalar h, Scalar delta) {
  return buildSpikePolygon(SpikeParams{m, std::move(w), std::move(h), std::move(delta)});
}

Outcome contributionExact() {
  const SpikePolygon sp = spike(4, 40, 2, 1);
  const Scalar expected = Scalar(5) / 41;
  const Scalar formula = Scalar(5, 2) * 2 * 1 / Scalar(1 + 40);
  bool ok = expected == formula && contributionFormula(sp.params()) == expected;
  std::ostringstream detail;
  for (int i : {2, 3}) {
    const MaxContribution best = maxContributionFrom(sp.left(i), sp, i);
    const bool viaNextTip = best.target == sp.tip(i + 1);
    ok = ok && best.value == expected && coneSeparationMax(sp, i) == expected && viaNextTip;
    detail << "i=" << i << ": " << formatScalar(best.value) << (viaNextTip ? " via t" : " not via t") << i + 1
           << "; ";
  }
  return {ok, detail.str() + "expected 5/41"};
}

Outcome separatorBound() {
  bool ok = true;
  std::ostringstream detail;
  for (long n : {12, 18, 24}) {
    const Scalar h(2);
    const Scalar delta = h / 2;
    const Scalar w = Scalar(5 * n) * h / 3;
    const SeparatorBound b = minSeparators(spike(static_cast<int>(n / 3), w, h, delta), 2);
    const Scalar want = Scalar(2 * n) / 3 + Scalar(1, 5);
    const BigInt ceilPlusOne = BigInt((2 * n + 2) / 3) + 1;
    ok = ok && b.threshold == want && b.k == ceilPlusOne && Scalar(b.k) > Scalar(2 * n) / 3;
    detail << "n=" << n << ": threshold " << formatScalar(b.threshold) << ", k " << b.k.get_str() << "; ";
  }
  return {ok, detail.str()};
}

Outcome ledgerConstancy() {
  int checked = 0;
  for (long long n = 6; n <= 60; n += 3) {
    if (vertexGuardLowerBound(n) != (2 * n) / 3 - 1) return {false, "lower bound differs at n=" + std::to_string(n)};
    for (long long n0 = 1; n0 <= n / 3; ++n0) {
      if (ledger(n, n0) != 2 * n / 3 - 1) {
        return {false, "ledger(" + std::to_string(n) + ", " + std::to_string(n0) + ") differs"};
      }
      ++checked;
    }
  }
  for (long long n = 7; n <= 60; ++n) {
    if (n % 3 != 0 && vertexGuardLowerBound(n) != (2 * n) / 3 - 1) {
      return {false, "lower bound differs at n=" + std::to_string(n)};
    }
  }
  return {true, std::to_string(checked) + " (n, n0) pairs equal 2n/3 - 1"};
}

Outcome constructionValidity() {
  const std::vector<std::tuple<long, long, Scalar>> shapes{
      {40, 2, Scalar(1)}, {17, 4, Scalar(3)}, {7, 5, Scalar(3)}, {100, 3, Scalar(1) / 7}, {5, 4, Scalar(7) / 2}};
  int points = 0;
  for (int m : {2, 3, 5, 8}) {
    for (const auto& [w, h, d] : shapes) {
      ++points;
      const std::string at = "m=" + std::to_string(m) + " w=" + std::to_string(w);
      SpikePolygon sp = spike(m, w, h, d);  // Polygon construction checks simplicity
      if (!generalPositionReport(sp.polygon(), spikeEdges(sp)).empty()) return {false, "general position at " + at};
      const Scalar hh(h);
      for (int i = 1; i <= m; ++i) {
        if (sp.tip(i).x != sp.right(i).x) return {false, "tip edge not vertical at " + at};
        const Scalar height = sp.tip(i).y - sp.right(i).y;
        if (height != (i < m ? Scalar(hh / 2) : Scalar(Scalar(3, 2) * hh))) return {false, "tip edge height at " + at};
        if (i < m) {
          if (sp.right(i).y != sp.left(i + 1).y) return {false, "tread not horizontal at " + at};
          if (sp.right(i).y - sp.left(i).y != hh) return {false, "vertical l-r distance at " + at};
          if (sp.right(i).x - sp.left(i).x != d) return {false, "horizontal l-r distance at " + at};
          if (sp.right(i + 1).x - sp.right(i).x != w) return {false, "spike spacing at " + at};
        }
      }
      const Line closing = Line::through(sp.right(m), sp.left(1));
      for (int i = 2; i <= m; ++i) {
        const Scalar cut = sp.left(i).y - closing.yAt(sp.left(i).x);
        if (!(cut > 0 && cut < d)) return {false, "B-cut out of (0, delta) at " + at};
      }
    }
  }
  return {points == 20, std::to_string(points) + " parameter points"};
}

Outcome oracleEquivalence() {
  int scenes = 0, discrepancies = 0, localizable = 0, signMismatch = 0;
  auto family = [&](testkit::SceneFamily kind, int count, std::int64_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
      const testkit::RandomScene scene = testkit::randomScene(rng, kind);
      const testkit::GridOracle oracle(scene, steps);
      const CellLabeling lab = labelScene(scene.polygon, scene.guards);
      ++scenes;
      if (oracle.signVectorCount() != lab.cells.size()) ++signMismatch;
      const Decision d = decide(lab);
      if (d.localizable != oracle.decide()) ++discrepancies;
      // A single guard's key as formula exercises the negative path too.
      const Formula f = d.localizable ? synthesizeDNF(lab) : Formula::leaf(scene.guards.front().key);
      if (verifyLocalization(scene.polygon, scene.guards, f).ok != oracle.verify(f)) ++discrepancies;
      if (d.localizable) {
        ++localizable;
        remember("oracle scene", scene.polygon, scene.guards);
      }
    }
  };
  family(testkit::SceneFamily::octilinear, 120, 4, 2026);
  family(testkit::SceneFamily::smallSlope, 60, 24, 1016);
  std::ostringstream detail;
  detail << scenes << " scenes, " << localizable << " localizable, " << discrepancies << " discrepancies, "
         << signMismatch << " unreached faces";
  return {scenes >= 100 && discrepancies == 0 && signMismatch == 0, detail.str()};
}

Outcome vertexSolutions() {
  bool ok = true;
  std::ostringstream detail;
  for (int m : {2, 3, 4}) {
    const SpikePolygon sp = spike(m, 40, 2, 1);
    const Solution s = vertexSolution(sp);
    const long long n = sp.params().n();
    const long long size = static_cast<long long>(s.guards.size());
    const bool verified = verifyLocalization(sp.polygon(), s.guards, s.formula).ok;
    ok = ok && verified && size <= 2 * n / 3 && size >= vertexGuardLowerBound(n);
    detail << "m=" << m << ": " << size << " guards in [" << vertexGuardLowerBound(n) << ", " << 2 * n / 3 << "]"
           << (verified ? "" : " UNVERIFIED") << "; ";
    remember("vertexSolution m=" + std::to_string(m), sp.polygon(), s.guards);
  }
  return {ok, detail.str()};
}

Outcome generalSeparation() {
  const SpikePolygon sp = spike(6, 40, 2, 1);
  const Solution s = generalSolution(sp);
  const bool verified = verifyLocalization(sp.polygon(), s.guards, s.formula).ok;
  const long long size = static_cast<long long>(s.guards.size());
  const long long bound = vertexGuardLowerBound(18);
  remember("generalSolution m=6", sp.polygon(), s.guards);
  std::ostringstream detail;
  detail << size << " general guards (target 9) vs vertex lower bound " << bound << (verified ? "" : ", UNVERIFIED");
  return {verified && size <= 10 && size < bound, detail.str()};
}

Outcome deskSearch() {
  const SpikePolygon sp = spike(2, 40, 2, 1);
  const SearchReport two = minVertexGuards(sp.polygon(), 2, 15min);
  const bool twoOk = two.exhaustive && two.infeasibleSizes == std::vector<int>{1, 2} && !two.bestFound;
  const SearchReport four = minVertexGuards(sp.polygon(), 4, 15min);
  bool fourOk = false;
  std::ostringstream detail;
  detail << two.candidateCount << " candidates; kmax=2 exhaustive=" << two.exhaustive << " infeasible {";
  for (std::size_t i = 0; i < two.infeasibleSizes.size(); ++i) detail << (i ? "," : "") << two.infeasibleSizes[i];
  detail << "}; kmax=4 ";
  if (four.bestFound) {
    const std::size_t size = four.bestFound->guards.size();
    fourOk = (size == 3 || size == 4) && verifyLocalization(sp.polygon(), four.bestFound->guards, four.bestFound->formula).ok;
    detail << "found size " << size;
    remember("search kmax=4", sp.polygon(), four.bestFound->guards);
  } else {
    fourOk = four.exhaustive;
    detail << "none, exhaustive=" << four.exhaustive;
  }
  return {twoOk && fourOk, detail.str()};
}

Outcome dnfSoundness() {
  int checked = 0, failures = 0;
  std::string firstFailure;
  for (const auto& s : g_localizable) {
    ++checked;
    const CellLabeling lab = labelScene(s.polygon, s.guards);
    if (!decide(lab).localizable || !verifyLocalization(s.polygon, s.guards, synthesizeDNF(lab)).ok) {
      if (failures++ == 0) firstFailure = "; first failure: " + s.origin;
    }
  }
  return {failures == 0 && checked > 0, std::to_string(checked) + " localizable scenes from criteria 5-8, " +
                                            std::to_string(failures) + " failures" + firstFailure};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limitSeconds;
  };
  const std::vector<Criterion> criteria{
      {"contribution formula exact", contributionExact, 1},
      {"separator bound", separatorBound, 1},
      {"ledger constancy", ledgerConstancy, 1},
      {"construction validity", constructionValidity, 10},
      {"verifier oracle equivalence", oracleEquivalence, 60},
      {"vertex solution", vertexSolutions, 60},
      {"general vs vertex separation", generalSeparation, 300},
      {"desk-scale lower-bound search", deskSearch, 1800},
      {"DNF synthesis soundness", dnfSoundness, 600},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    while (o.detail.ends_with(" ") || o.detail.ends_with(";")) o.detail.pop_back();
    if (secs > criteria[i].limitSeconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(criteria[i].limitSeconds)) + " s limit";
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
