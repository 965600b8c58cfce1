#pragma once

// Quantities from the vertex-guard lower bound on the spike polygon: how far
// a ray cuts across a tip guard's cone, the best such cut from a point, the
// number of separating rays it forces and the final guard count.

#include "loclab/spike.hpp"

#include <optional>

namespace loclab {

/// Vertical extent that a ray's supporting line cuts across the natural tip
/// guard cone of one spike.
struct ContributionReport {
  Ray ray;
  std::optional<Point> leftHit;   // on the ray t_i -> l_i
  std::optional<Point> rightHit;  // on the ray t_i -> r_i
  Scalar value;                   // |y(leftHit) - y(rightHit)|, 0 on a miss
};

/// Intersects the ray's supporting line with the two boundary rays of the
/// tip cone of spike i (1 <= i <= m). A miss of either boundary ray, or a
/// line identical to a boundary line, contributes 0.
ContributionReport contribution(const Ray& ray, const SpikePolygon& sp, int i);

struct MaxContribution {
  Scalar value;
  Ray ray;
  Point target;  // polygon vertex the achieving ray passes through
};

/// Best of the four rays from p bounding its double cone: through t_{i-1},
/// l_{i-1}, t_{i+1} and l_{i+1} (p above line(l_{i+1}, r_m)) or r_m (below).
/// Requires 2 <= i <= m-1 and p inside or on the tip cone of spike i.
MaxContribution maxContributionFrom(const Point& p, const SpikePolygon& sp, int i);

/// maxContributionFrom(l_i). Equals 2.5*h*delta/(delta + w) whenever
/// w >= 1.5*delta; for narrower spacing the ray through t_{i-1} wins.
Scalar coneSeparationMax(const SpikePolygon& sp, int i);

/// Closed form 2.5*h*delta/(delta + w).
Scalar contributionFormula(const SpikeParams& p);

struct SeparatorBound {
  Scalar threshold;  // (h - delta)(delta + w) / (2.5 h delta)
  BigInt k;          // smallest integer strictly above threshold
};

SeparatorBound minSeparators(const SpikePolygon& sp, int i);

/// n0 + (n0 - 1) + (2n/3 - 2n0) for 1 <= n0 <= n/3; n0 = 0 gives 2n/3.
long long ledger(long long n, long long n0);

/// floor(2n/3) - 1, n >= 6.
long long vertexGuardLowerBound(long long n);

}  // namespace loclab
