#include "loclab/scene_io.hpp"

#include <set>

namespace loclab {

namespace {

using Reason = SceneError::Reason;

[[noreturn]] void schemaError(const std::string& what) { throw SceneError(Reason::schema, what); }

const Json& member(const Json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) schemaError(where + ": missing \"" + name + "\"");
  return *it;
}

Json pairToJson(const Scalar& a, const Scalar& b) { return Json::array({scalarToJson(a), scalarToJson(b)}); }

std::pair<Scalar, Scalar> pairFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schemaError(where + ": expected a pair [x, y]");
  return {scalarFromJson(j[0]), scalarFromJson(j[1])};
}

Point pointFromJson(const Json& j, const std::string& where) {
  auto [x, y] = pairFromJson(j, where);
  return {std::move(x), std::move(y)};
}

Direction directionFromJson(const Json& j, const std::string& where) {
  auto [dx, dy] = pairFromJson(j, where);
  if (dx == 0 && dy == 0) throw SceneError(Reason::invalid_guard, where + ": zero direction");
  return Direction(std::move(dx), std::move(dy));
}

Guard guardFromJson(const Json& j, std::size_t index) {
  const std::string where = "guards[" + std::to_string(index) + "]";
  if (!j.is_object()) schemaError(where + ": expected an object");
  const Json& keyJson = member(j, "key", where);
  if (!keyJson.is_string() || keyJson.get<std::string>().empty()) schemaError(where + ": key must be a nonempty string");
  Point apex = pointFromJson(member(j, "apex", where), where + ".apex");
  Direction d1 = directionFromJson(member(j, "d1", where), where + ".d1");
  Direction d2 = directionFromJson(member(j, "d2", where), where + ".d2");
  std::string key = keyJson.get<std::string>();
  try {
    auto reflex = j.find("reflex");
    if (reflex == j.end()) return Guard::sweep(std::move(apex), std::move(d1), std::move(d2), std::move(key));
    if (!reflex->is_boolean()) schemaError(where + ": reflex must be a boolean");
    return Guard::make(std::move(apex), std::move(d1), std::move(d2), reflex->get<bool>(), std::move(key));
  } catch (const GeometryError& e) {
    throw SceneError(Reason::invalid_guard, where + ": " + e.what());
  }
}

Polygon polygonFromJson(const Json& j) {
  if (!j.is_array()) schemaError("polygon: expected an array of points");
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < j.size(); ++i) vertices.push_back(pointFromJson(j[i], "polygon[" + std::to_string(i) + "]"));
  try {
    return Polygon(std::move(vertices));
  } catch (const PolygonError& e) {
    throw SceneError(e.reason() == PolygonError::Reason::non_simple ? Reason::non_simple_polygon
                                                                    : Reason::invalid_polygon,
                     e.what());
  }
}

bool sameGuard(const Guard& a, const Guard& b) { return a.key == b.key && sameSector(a, b); }

}  // namespace

bool operator==(const Scene& a, const Scene& b) {
  if (!(a.polygon == b.polygon) || a.roles != b.roles || a.formula != b.formula) return false;
  if (a.guards.size() != b.guards.size()) return false;
  for (std::size_t i = 0; i < a.guards.size(); ++i) {
    if (!sameGuard(a.guards[i], b.guards[i])) return false;
  }
  return true;
}

Json scalarToJson(const Scalar& s) { return formatScalar(s); }

Scalar scalarFromJson(const Json& j) {
  try {
    if (j.is_string()) return parseScalar(j.get<std::string>());
    if (j.is_number_integer()) return parseScalar(j.dump());
  } catch (const GeometryError& e) {
    throw SceneError(Reason::bad_scalar, e.what());
  }
  throw SceneError(Reason::bad_scalar, "scalar must be an integer or a rational string, got " + j.dump());
}

Json pointToJson(const Point& p) { return pairToJson(p.x, p.y); }

Json guardToJson(const Guard& g) {
  Json j;
  j["apex"] = pointToJson(g.apex);
  j["d1"] = pairToJson(g.d1.dx(), g.d1.dy());
  j["d2"] = pairToJson(g.d2.dx(), g.d2.dy());
  j["reflex"] = g.reflex;
  j["key"] = g.key;
  return j;
}

Json formulaToJson(const Formula& f) {
  if (f.op() == Formula::Op::leaf) return f.key();
  Json j = Json::array({f.op() == Formula::Op::all ? "and" : "or"});
  for (const auto& c : f.children()) j.push_back(formulaToJson(c));
  return j;
}

Formula formulaFromJson(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>().empty()) schemaError("formula: empty key");
    return Formula::leaf(j.get<std::string>());
  }
  if (!j.is_array() || j.size() < 2 || !j[0].is_string()) {
    schemaError("formula: expected \"key\" or [\"and\"|\"or\", ...] with at least one operand");
  }
  const std::string op = j[0].get<std::string>();
  if (op != "and" && op != "or") schemaError("formula: unknown operator \"" + op + "\"");
  std::vector<Formula> children;
  for (std::size_t i = 1; i < j.size(); ++i) children.push_back(formulaFromJson(j[i]));
  return op == "and" ? Formula::allOf(std::move(children)) : Formula::anyOf(std::move(children));
}

Scene sceneFromJson(const Json& j) {
  if (!j.is_object()) schemaError("scene: expected a JSON object");
  Polygon polygon = polygonFromJson(member(j, "polygon", "scene"));

  std::vector<std::string> roles;
  if (auto it = j.find("roles"); it != j.end()) {
    if (!it->is_array()) schemaError("roles: expected an array of strings");
    for (const auto& r : *it) {
      if (!r.is_string()) schemaError("roles: expected an array of strings");
      roles.push_back(r.get<std::string>());
    }
    if (roles.size() != polygon.size()) schemaError("roles: count does not match the polygon");
  }

  std::vector<Guard> guards;
  if (auto it = j.find("guards"); it != j.end()) {
    if (!it->is_array()) schemaError("guards: expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < it->size(); ++i) {
      guards.push_back(guardFromJson((*it)[i], i));
      if (!seen.insert(guards.back().key).second) {
        throw SceneError(Reason::duplicate_key, "duplicate guard key \"" + guards.back().key + "\"");
      }
    }
  }

  std::optional<Formula> formula;
  if (auto it = j.find("formula"); it != j.end() && !it->is_null()) {
    formula = formulaFromJson(*it);
    for (const auto& k : formula->keys()) {
      bool known = false;
      for (const auto& g : guards) known = known || g.key == k;
      if (!known) throw SceneError(Reason::unknown_formula_key, "formula references unknown key \"" + k + "\"");
    }
  }
  return Scene{std::move(polygon), std::move(roles), std::move(guards), std::move(formula)};
}

Scene parseScene(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SceneError(Reason::malformed_json, std::string("malformed JSON: ") + e.what());
  }
  return sceneFromJson(j);
}

Json sceneToJson(const Scene& scene) {
  Json j;
  j["polygon"] = Json::array();
  for (const auto& p : scene.polygon.vertices()) j["polygon"].push_back(pointToJson(p));
  if (!scene.roles.empty()) j["roles"] = scene.roles;
  j["guards"] = Json::array();
  for (const auto& g : scene.guards) j["guards"].push_back(guardToJson(g));
  if (scene.formula) j["formula"] = formulaToJson(*scene.formula);
  return j;
}

std::string serializeScene(const Scene& scene) { return sceneToJson(scene).dump(2) + "\n"; }

Json witnessToJson(const CellWitness& w) {
  Json j;
  j["representative"] = pointToJson(w.representative);
  j["keySet"] = Json::array();
  for (const auto& k : w.keySet) j["keySet"].push_back(k);
  j["inside"] = w.inside;
  return j;
}

Json verdictToJson(const Verdict& v) {
  Json j;
  j["ok"] = v.ok;
  if (v.witness) j["witness"] = witnessToJson(*v.witness);
  if (v.formulaValue) j["formulaValue"] = *v.formulaValue;
  return j;
}

Json decisionToJson(const Decision& d) {
  Json j;
  j["localizable"] = d.localizable;
  if (d.insideCell) j["insideCell"] = witnessToJson(*d.insideCell);
  if (d.outsideCell) j["outsideCell"] = witnessToJson(*d.outsideCell);
  return j;
}

Json solutionSummaryToJson(const Solution& s) {
  Json j;
  j["kind"] = s.kind == SolutionKind::vertex ? "vertex" : "general";
  j["size"] = s.guards.size();
  j["guards"] = Json::array();
  for (const auto& g : s.guards) j["guards"].push_back(guardToJson(g));
  j["formula"] = formulaToJson(s.formula);
  return j;
}

Json searchReportToJson(const SearchReport& r) {
  Json j;
  j["kmax"] = r.kmax;
  j["candidateCount"] = r.candidateCount;
  j["exhaustive"] = r.exhaustive;
  j["infeasibleSizes"] = r.infeasibleSizes;
  j["subsetsDecided"] = r.subsetsDecided;
  j["bestFound"] = r.bestFound ? solutionSummaryToJson(*r.bestFound) : Json(nullptr);
  return j;
}

}  // namespace loclab
