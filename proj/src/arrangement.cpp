#include "loclab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace loclab {

namespace {

// Samples strictly between consecutive sorted breakpoints plus one beyond
// each end. An empty breakpoint list yields the single sample 0.
std::vector<Scalar> samplesAround(const std::vector<Scalar>& sorted) {
  std::vector<Scalar> out;
  if (sorted.empty()) {
    out.emplace_back(0);
    return out;
  }
  out.reserve(sorted.size() + 1);
  out.emplace_back(sorted.front() - 1);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) out.emplace_back((sorted[i] + sorted[i + 1]) / 2);
  out.emplace_back(sorted.back() + 1);
  return out;
}

void sortUnique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::int8_t> signVector(std::span<const Line> lines, const Point& p) {
  std::vector<std::int8_t> s(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int side = sideOfLine(lines[i], p);
    if (side == 0) throw ArrangementError("cell sample lies on line " + lines[i].toString());
    s[i] = static_cast<std::int8_t>(side);
  }
  return s;
}

// All faces crossed by the vertical line at abscissa x. x must avoid every
// vertex and vertical line, so the non-vertical lines are strictly ordered.
std::vector<Cell> sliceCells(std::span<const Line> lines, const Scalar& x) {
  std::vector<Scalar> ys;
  for (const auto& l : lines) {
    if (!l.isVertical()) ys.push_back(l.yAt(x));
  }
  sortUnique(ys);
  std::vector<Cell> out;
  for (auto& y : samplesAround(ys)) {
    Point p{x, std::move(y)};
    auto signs = signVector(lines, p);
    out.push_back(Cell{std::move(signs), std::move(p)});
  }
  return out;
}

KeyMask keyMaskAt(std::span<const Guard> guards, const Point& p) {
  KeyMask m(guards.size());
  for (std::size_t g = 0; g < guards.size(); ++g) {
    if (coneContains(guards[g], p)) m.set(g);
  }
  return m;
}

KeySet toKeySet(const std::vector<std::string>& keys, const KeyMask& m) {
  KeySet out;
  for (auto i = m.find_first(); i != KeyMask::npos; i = m.find_next(i)) out.insert(keys[i]);
  return out;
}

CellWitness witnessFor(const CellLabeling& lab, std::size_t cell) {
  return {lab.cells[cell].representative, lab.keySet(cell), lab.labels[cell].inside};
}

void requireUniqueKeys(std::span<const Guard> guards) {
  std::set<std::string> seen;
  for (const auto& g : guards) {
    if (!seen.insert(g.key).second) throw GeometryError("duplicate guard key '" + g.key + "'");
  }
}

}  // namespace

KeySet CellLabeling::keySet(std::size_t cell) const { return toKeySet(keys, labels[cell].keys); }

std::vector<Line> collectLines(const Polygon& poly, std::span<const Guard> guards) {
  std::vector<Line> lines;
  for (const auto& e : poly.edges()) lines.push_back(e.line());
  for (const auto& g : guards) {
    lines.push_back(g.ray1().line());
    lines.push_back(g.ray2().line());
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<Cell> enumerateCells(std::span<const Line> lines, Execution exec) {
  if (lines.empty()) throw GeometryError("arrangement needs at least one line");
  std::vector<Scalar> breaks;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].isVertical()) breaks.push_back(lines[i].xAt(0));
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto hit = intersectLines(lines[i], lines[j]);
      if (hit.point) breaks.push_back(hit.point->x);
    }
  }
  sortUnique(breaks);
  const std::vector<Scalar> xs = samplesAround(breaks);

  std::vector<std::vector<Cell>> slices(xs.size());
  forEachIndex(xs.size(), exec, [&](std::size_t k) { slices[k] = sliceCells(lines, xs[k]); });

  std::vector<Cell> cells;
  for (auto& s : slices) {
    for (auto& c : s) cells.push_back(std::move(c));
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
  cells.erase(std::unique(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.signs == b.signs; }),
              cells.end());
  return cells;
}

CellLabeling labelCells(const Polygon& poly, std::span<const Guard> guards, std::vector<Cell> cells, Execution exec) {
  requireUniqueKeys(guards);
  CellLabeling lab;
  for (const auto& g : guards) lab.keys.push_back(g.key);
  lab.labels.resize(cells.size());
  forEachIndex(cells.size(), exec, [&](std::size_t i) {
    const Point& p = cells[i].representative;
    const Location loc = pointInPolygon(poly, p);
    if (loc == Location::boundary) throw ArrangementError("cell sample lies on the polygon boundary");
    lab.labels[i] = CellLabel{keyMaskAt(guards, p), loc == Location::inside};
  });
  lab.cells = std::move(cells);
  return lab;
}

CellLabeling labelScene(const Polygon& poly, std::span<const Guard> guards, Execution exec) {
  const auto lines = collectLines(poly, guards);
  return labelCells(poly, guards, enumerateCells(lines, exec), exec);
}

Verdict verifyLocalization(const Polygon& poly, std::span<const Guard> guards, const Formula& f, Execution exec) {
  std::unordered_map<std::string, std::size_t> bit;
  for (std::size_t i = 0; i < guards.size(); ++i) bit.emplace(guards[i].key, i);
  for (const auto& k : f.keys()) {
    if (!bit.count(k)) throw GeometryError("formula references unknown key '" + k + "'");
  }
  const CellLabeling lab = labelScene(poly, guards, exec);

  std::vector<char> value(lab.cells.size());
  forEachIndex(lab.cells.size(), exec, [&](std::size_t i) {
    const KeyMask& m = lab.labels[i].keys;
    value[i] = f.evaluateWith([&](const std::string& k) { return m.test(bit.at(k)); });
  });

  Verdict v;
  v.ok = true;
  for (std::size_t i = 0; i < lab.cells.size(); ++i) {
    if (static_cast<bool>(value[i]) != lab.labels[i].inside) {
      v.ok = false;
      v.witness = witnessFor(lab, i);
      v.formulaValue = static_cast<bool>(value[i]);
      break;
    }
  }
  return v;
}

Decision decide(const CellLabeling& lab) {
  std::map<KeyMask, std::size_t> inside;
  std::map<KeyMask, std::size_t> outside;
  for (std::size_t i = 0; i < lab.cells.size(); ++i) {
    auto& bucket = lab.labels[i].inside ? inside : outside;
    bucket.emplace(lab.labels[i].keys, i);
  }
  Decision d;
  for (const auto& [in, ci] : inside) {
    for (const auto& [out, co] : outside) {
      if (in.is_subset_of(out)) {
        d.insideCell = witnessFor(lab, ci);
        d.outsideCell = witnessFor(lab, co);
        return d;
      }
    }
  }
  d.localizable = true;
  return d;
}

Decision decideLocalizable(const Polygon& poly, std::span<const Guard> guards, Execution exec) {
  return decide(labelScene(poly, guards, exec));
}

Formula synthesizeDNF(const CellLabeling& lab) {
  Decision d = decide(lab);
  if (!d.localizable) throw NotLocalizableError(std::move(d));

  std::set<KeyMask> distinct;
  for (const auto& l : lab.labels) {
    if (l.inside) distinct.insert(l.keys);
  }
  std::vector<KeyMask> minimal;
  for (const auto& m : distinct) {
    bool dominated = false;
    for (const auto& other : distinct) {
      if (other != m && other.is_subset_of(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(m);
  }
  auto bits = [](const KeyMask& m) {
    std::vector<std::size_t> v;
    for (auto i = m.find_first(); i != KeyMask::npos; i = m.find_next(i)) v.push_back(i);
    return v;
  };
  std::sort(minimal.begin(), minimal.end(), [&](const KeyMask& a, const KeyMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return bits(a) < bits(b);
  });

  std::vector<Formula> terms;
  for (const auto& m : minimal) {
    std::vector<Formula> leaves;
    for (auto i : bits(m)) leaves.push_back(Formula::leaf(lab.keys[i]));
    terms.push_back(leaves.size() == 1 ? std::move(leaves.front()) : Formula::allOf(std::move(leaves)));
  }
  return terms.size() == 1 ? std::move(terms.front()) : Formula::anyOf(std::move(terms));
}

}  // namespace loclab
