#pragma once

// Verified guard placements for the spike polygon and an exhaustive search
// over canonical vertex guards for tiny polygons.

#include "loclab/arrangement.hpp"
#include "loclab/spike.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

namespace loclab {

enum class SolutionKind { vertex, general };

struct Solution {
  std::vector<Guard> guards;
  Formula formula;
  SolutionKind kind;
};

/// Raised when a constructed placement fails the verifier; carries the
/// failing verdict so the cell can be re-checked.
class PlacementError : public std::runtime_error {
 public:
  PlacementError(const std::string& what, Verdict v) : std::runtime_error(what), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Synthesizes the DNF for `guards`, verifies it and checks that every edge
/// is covered. Throws PlacementError or NotLocalizableError on failure.
Solution certify(const Polygon& poly, std::vector<Guard> guards, SolutionKind kind,
                 Execution exec = Execution::parallel);

/// 2m vertex guards: natural tip guards at every t_i, a quadrant at each
/// r_i (i < m) bounded by the tread r_i l_{i+1} and the downward vertical,
/// and the half-plane above the closing edge at l_1.
Solution vertexSolution(const SpikePolygon& sp, Execution exec = Execution::parallel);

/// The same placement without verification; used for probes that remove or
/// alter guards.
std::vector<Guard> vertexPlacement(const SpikePolygon& sp);

/// Guards at intersections of pairs of edge supporting lines: 3m/2 guards
/// for even m, each edge covered by exactly one boundary ray; (3m+1)/2 for
/// odd m.
Solution generalSolution(const SpikePolygon& sp, Execution exec = Execution::parallel);
std::vector<Guard> generalPlacement(const SpikePolygon& sp);

/// All vertex guards whose boundary directions come from
/// D(v) = {v -> u : u another vertex} + {both directions along each incident
/// edge}, in canonical order: vertex index, then d1, then d2 in D(v) order.
std::vector<Guard> enumerateCanonicalGuards(const Polygon& poly);

struct SearchReport {
  int kmax = 0;
  std::optional<Solution> bestFound;
  std::vector<int> infeasibleSizes;
  std::size_t candidateCount = 0;
  bool exhaustive = true;
  /// Subsets that passed the covering filter and were decided.
  std::size_t subsetsDecided = 0;
};

/// Smallest k <= kmax for which some k-subset of canonical candidates
/// localizes the polygon. Subsets failing the edge-covering condition are
/// pruned before any localization check. Stops with exhaustive = false when
/// the budget runs out.
SearchReport minVertexGuards(const Polygon& poly, int kmax, std::chrono::duration<double> budget,
                             Execution exec = Execution::parallel);

}  // namespace loclab
