#pragma once

// Scene JSON and the JSON forms of verifier, search and bound results.
//
// Scene schema:
//   {"polygon": [[x, y], ...],
//    "roles":   ["l1", "t1", ...],                      (optional)
//    "guards":  [{"apex": [x, y], "d1": [dx, dy], "d2": [dx, dy],
//                 "reflex": bool, "key": "..."}, ...],
//    "formula": "key" | ["and" | "or", <formula>, ...]  (optional)}
// Scalars are written as canonical rational strings ("5/41", "-3"); input
// also accepts JSON integers.

#include "loclab/arrangement.hpp"
#include "loclab/bounds.hpp"
#include "loclab/placements.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loclab {

using Json = nlohmann::ordered_json;

struct Scene {
  Polygon polygon;
  std::vector<std::string> roles;  // empty when absent
  std::vector<Guard> guards;
  std::optional<Formula> formula;

  friend bool operator==(const Scene& a, const Scene& b);
};

class SceneError : public std::runtime_error {
 public:
  enum class Reason {
    malformed_json,
    schema,
    bad_scalar,
    non_simple_polygon,
    invalid_polygon,
    invalid_guard,
    duplicate_key,
    unknown_formula_key,
  };
  SceneError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

Scene parseScene(std::string_view text);
Scene sceneFromJson(const Json& j);
Json sceneToJson(const Scene& scene);
/// Two-space indented JSON followed by a newline.
std::string serializeScene(const Scene& scene);

Json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const Json& j);
Json pointToJson(const Point& p);
Json guardToJson(const Guard& g);
Json formulaToJson(const Formula& f);
Formula formulaFromJson(const Json& j);

Json witnessToJson(const CellWitness& w);
Json verdictToJson(const Verdict& v);
Json decisionToJson(const Decision& d);
Json searchReportToJson(const SearchReport& r);
Json solutionSummaryToJson(const Solution& s);

}  // namespace loclab
