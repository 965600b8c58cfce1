#include "loclab/bounds.hpp"

#include <array>

namespace loclab {

namespace {

void requireInteriorSpike(const SpikePolygon& sp, int i) {
  if (i < 2 || i > sp.m() - 1) {
    throw GeometryError("double-cone bounds need 2 <= i <= m-1 (got i=" + std::to_string(i) + ")");
  }
}

std::optional<Point> hitBoundary(const Line& probe, const Ray& boundary) {
  auto hit = intersectLines(probe, boundary.line());
  if (hit.kind != LineIntersection::Kind::point || !rayContains(boundary, *hit.point)) return std::nullopt;
  return hit.point;
}

}  // namespace

ContributionReport contribution(const Ray& ray, const SpikePolygon& sp, int i) {
  if (i < 1 || i > sp.m()) throw GeometryError("spike index out of range");
  const Ray leftBoundary{sp.tip(i), Direction::from(sp.tip(i), sp.left(i))};
  const Ray rightBoundary{sp.tip(i), Direction::from(sp.tip(i), sp.right(i))};
  const Line probe = ray.line();

  ContributionReport r{ray, std::nullopt, std::nullopt, Scalar(0)};
  if (probe == leftBoundary.line() || probe == rightBoundary.line()) return r;
  r.leftHit = hitBoundary(probe, leftBoundary);
  r.rightHit = hitBoundary(probe, rightBoundary);
  if (r.leftHit && r.rightHit) r.value = abs(r.leftHit->y - r.rightHit->y);
  return r;
}

MaxContribution maxContributionFrom(const Point& p, const SpikePolygon& sp, int i) {
  requireInteriorSpike(sp, i);
  if (!coneContains(tipGuard(sp, i, "tip"), p)) throw GeometryError("point is outside the tip cone");
  const Point& lNext = sp.left(i + 1);
  const Point& rLast = sp.right(sp.m());
  const bool above = orient(lNext, rLast, p) >= 0;
  const std::array<Point, 4> targets{sp.tip(i - 1), sp.left(i - 1), sp.tip(i + 1), above ? lNext : rLast};

  std::optional<MaxContribution> best;
  for (const auto& target : targets) {
    if (target == p) continue;
    Ray ray{p, Direction::from(p, target)};
    Scalar v = contribution(ray, sp, i).value;
    if (!best || v > best->value) best = MaxContribution{std::move(v), std::move(ray), target};
  }
  return *best;
}

Scalar coneSeparationMax(const SpikePolygon& sp, int i) { return maxContributionFrom(sp.left(i), sp, i).value; }

Scalar contributionFormula(const SpikeParams& p) { return Scalar(5, 2) * p.h * p.delta / (p.delta + p.w); }

SeparatorBound minSeparators(const SpikePolygon& sp, int i) {
  requireInteriorSpike(sp, i);
  const SpikeParams& p = sp.params();
  Scalar threshold = (p.h - p.delta) / contributionFormula(p);
  BigInt floor;
  mpz_fdiv_q(floor.get_mpz_t(), threshold.get_num_mpz_t(), threshold.get_den_mpz_t());
  return {std::move(threshold), BigInt(floor + 1)};
}

long long ledger(long long n, long long n0) {
  if (n < 6 || n % 3 != 0) throw GeometryError("ledger needs n >= 6 with 3 | n");
  if (n0 < 0 || n0 > n / 3) throw GeometryError("ledger needs 0 <= n0 <= n/3");
  // Without natural tip guards every guard covers at most one spike edge.
  if (n0 == 0) return 2 * n / 3;
  return n0 + (n0 - 1) + (2 * n / 3 - 2 * n0);
}

long long vertexGuardLowerBound(long long n) {
  if (n < 6) throw GeometryError("vertex guard lower bound needs n >= 6");
  return 2 * n / 3 - 1;
}

}  // namespace loclab
