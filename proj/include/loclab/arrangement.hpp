#pragma once

// Exact localization check over the arrangement of every supporting line in
// a scene. Each open face of the arrangement has a constant key set and a
// constant inside/outside status, so checking one sample per face decides
// localization for all points off the lines.

#include "loclab/model.hpp"
#include "loclab/parallel.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace loclab {

/// Bit i set iff guard i's cone contains the point.
using KeyMask = boost::dynamic_bitset<>;

struct Cell {
  std::vector<std::int8_t> signs;  // sideOfLine per line, never 0
  Point representative;
};

struct CellLabel {
  KeyMask keys;
  bool inside = false;
};

struct CellLabeling {
  std::vector<std::string> keys;  // guard keys, bit order of KeyMask
  std::vector<Cell> cells;
  std::vector<CellLabel> labels;

  KeySet keySet(std::size_t cell) const;
};

/// Canonical, deduplicated supporting lines of all edges and all guard
/// boundary rays, sorted.
std::vector<Line> collectLines(const Polygon& poly, std::span<const Guard> guards);

/// One cell per open face, sorted by sign vector.
std::vector<Cell> enumerateCells(std::span<const Line> lines, Execution exec = Execution::parallel);

/// Raised when a cell representative lands on a line or on the polygon
/// boundary; it indicates a bug in the arrangement, never bad input.
class ArrangementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

CellLabeling labelCells(const Polygon& poly, std::span<const Guard> guards, std::vector<Cell> cells,
                        Execution exec = Execution::parallel);

/// Full pipeline: collect lines, enumerate, label.
CellLabeling labelScene(const Polygon& poly, std::span<const Guard> guards, Execution exec = Execution::parallel);

struct CellWitness {
  Point representative;
  KeySet keySet;
  bool inside = false;
};

struct Verdict {
  bool ok = false;
  std::optional<CellWitness> witness;
  /// Formula value at the witness (always != witness->inside).
  std::optional<bool> formulaValue;
};

Verdict verifyLocalization(const Polygon& poly, std::span<const Guard> guards, const Formula& f,
                           Execution exec = Execution::parallel);

struct Decision {
  bool localizable = false;
  /// Inside cell whose key set is contained in the outside cell's key set.
  std::optional<CellWitness> insideCell;
  std::optional<CellWitness> outsideCell;
};

/// Localizable by some monotone formula iff no inside key set is a subset of
/// an outside key set.
Decision decide(const CellLabeling& labeling);
Decision decideLocalizable(const Polygon& poly, std::span<const Guard> guards, Execution exec = Execution::parallel);

class NotLocalizableError : public std::runtime_error {
 public:
  explicit NotLocalizableError(Decision d)
      : std::runtime_error("guard set does not localize the polygon"), decision_(std::move(d)) {}
  const Decision& decision() const { return decision_; }

 private:
  Decision decision_;
};

/// OR over the subset-minimal inside key sets of the AND of their keys.
/// Singleton ORs and ANDs collapse to their only child.
Formula synthesizeDNF(const CellLabeling& labeling);

}  // namespace loclab
