// loclab: command-line front end.
// Exit codes: 0 success, 2 valid run with a negative verdict, 1 usage or
// input error. Machine-readable JSON goes to stdout, diagnostics to stderr.

#include "loclab/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace loclab;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

std::string readInput(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void writeOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string jsonText(const Json& j) { return j.dump(2) + "\n"; }

Json bigIntToJson(const BigInt& z) { return z.fits_slong_p() ? Json(z.get_si()) : Json(z.get_str()); }

SpikePolygon spikeOf(const Scene& scene) {
  if (scene.roles.empty()) throw std::runtime_error("scene has no roles; spike commands need l/t/r role tags");
  return recognizeSpikePolygon(scene.polygon, scene.roles);
}

struct Options {
  bool serial = false;
  std::string input = "-";
  std::string output;
  // gen
  int m = 0;
  std::string w, h, delta;
  // bounds
  int spike = 0;
  // search
  int kmax = 2;
  double budget = 60.0;
  // render
  std::string layers = "polygon,cones";
  std::string viewport;
  int width = 960;
};

Execution execOf(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

int cmdGen(const Options& o) {
  SpikeParams p{o.m, parseScalar(o.w), parseScalar(o.h), parseScalar(o.delta)};
  const SpikePolygon sp = buildSpikePolygon(p);
  writeOutput(o.output, serializeScene(Scene{sp.polygon(), sp.roleTags(), {}, std::nullopt}));
  return kOk;
}

int cmdVerify(const Options& o) {
  const Scene scene = parseScene(readInput(o.input));
  if (!scene.formula) throw std::runtime_error("scene has no formula to verify");
  const Verdict v = verifyLocalization(scene.polygon, scene.guards, *scene.formula, execOf(o));
  writeOutput(o.output, jsonText(verdictToJson(v)));
  if (!v.ok) std::cerr << "not localized: formula disagrees with the polygon at the witness cell\n";
  return v.ok ? kOk : kNegative;
}

int cmdDecide(const Options& o) {
  const Scene scene = parseScene(readInput(o.input));
  const Decision d = decideLocalizable(scene.polygon, scene.guards, execOf(o));
  writeOutput(o.output, jsonText(decisionToJson(d)));
  if (!d.localizable) std::cerr << "not localizable: an interior key set is contained in an exterior one\n";
  return d.localizable ? kOk : kNegative;
}

int cmdSynth(const Options& o) {
  Scene scene = parseScene(readInput(o.input));
  const CellLabeling lab = labelScene(scene.polygon, scene.guards, execOf(o));
  try {
    scene.formula = synthesizeDNF(lab);
  } catch (const NotLocalizableError& e) {
    writeOutput(o.output, jsonText(decisionToJson(e.decision())));
    std::cerr << "not localizable: no monotone formula exists for these guards\n";
    return kNegative;
  }
  writeOutput(o.output, serializeScene(scene));
  return kOk;
}

int cmdBounds(const Options& o) {
  const Scene scene = parseScene(readInput(o.input));
  const SpikePolygon sp = spikeOf(scene);
  const SpikeParams& p = sp.params();
  const MaxContribution best = maxContributionFrom(sp.left(o.spike), sp, o.spike);
  const SeparatorBound sep = minSeparators(sp, o.spike);

  Json j;
  j["spike"] = o.spike;
  j["params"] = {{"m", p.m},
                 {"w", scalarToJson(p.w)},
                 {"h", scalarToJson(p.h)},
                 {"delta", scalarToJson(p.delta)}};
  j["n"] = p.n();
  j["contributionFormula"] = scalarToJson(contributionFormula(p));
  j["coneSeparationMax"] = {{"value", scalarToJson(best.value)},
                            {"from", pointToJson(best.ray.origin)},
                            {"through", pointToJson(best.target)}};
  j["threshold"] = scalarToJson(sep.threshold);
  j["k"] = bigIntToJson(sep.k);
  j["vertexGuardLowerBound"] = vertexGuardLowerBound(p.n());
  writeOutput(o.output, jsonText(j));
  return kOk;
}

int cmdSearch(const Options& o) {
  const Scene scene = parseScene(readInput(o.input));
  if (o.budget <= 0) throw std::runtime_error("--budget must be positive");
  const SearchReport r = minVertexGuards(scene.polygon, o.kmax, std::chrono::duration<double>(o.budget), execOf(o));
  writeOutput(o.output, jsonText(searchReportToJson(r)));
  if (!r.bestFound) {
    std::cerr << (r.exhaustive ? "no localizing guard set up to kmax\n" : "budget exhausted before a solution\n");
  }
  return r.bestFound ? kOk : kNegative;
}

int cmdSolve(const Options& o, SolutionKind kind) {
  Scene scene = parseScene(readInput(o.input));
  const SpikePolygon sp = spikeOf(scene);
  Solution s = kind == SolutionKind::vertex ? vertexSolution(sp, execOf(o)) : generalSolution(sp, execOf(o));
  scene.guards = std::move(s.guards);
  scene.formula = std::move(s.formula);
  writeOutput(o.output, serializeScene(scene));
  return kOk;
}

Viewport parseViewport(const std::string& text) {
  std::vector<Scalar> v;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) v.push_back(parseScalar(part));
  if (v.size() != 4) throw std::runtime_error("--viewport needs xmin,ymin,xmax,ymax");
  return {v[0], v[1], v[2], v[3]};
}

int cmdRender(const Options& o) {
  const Scene scene = parseScene(readInput(o.input));
  RenderSpec spec;
  spec.viewport = o.viewport.empty() ? fitViewport(scene) : parseViewport(o.viewport);
  spec.widthPx = o.width;
  spec.layers.clear();
  std::stringstream ss(o.layers);
  for (std::string part; std::getline(ss, part, ',');) spec.layers.insert(parseLayer(part));
  if (spec.layers.count(Layer::witnesses)) {
    const Decision d = decideLocalizable(scene.polygon, scene.guards, execOf(o));
    if (auto pair = witnessPair(scene.polygon, scene.guards, d)) spec.witnesses.push_back(*pair);
  }
  writeOutput(o.output, renderSVG(scene, spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wireless-localization toolkit for polygons and guard cones"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--serial", o.serial, "Use the single-threaded reference path");

  auto scene = [&](CLI::App* sub) {
    sub->add_option("scene", o.input, "Scene JSON file, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "Build a spike polygon scene");
  gen->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  gen->add_option("--m", o.m, "Number of spikes")->required();
  gen->add_option("--w", o.w, "Horizontal spike spacing")->required();
  gen->add_option("--h", o.h, "Vertical spike spacing")->required();
  gen->add_option("--delta", o.delta, "Spike base width")->required();
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the scene formula against the polygon");
  scene(verify);
  auto* decide = app.add_subcommand("decide", "Decide whether any monotone formula localizes the guards");
  scene(decide);
  auto* synth = app.add_subcommand("synth", "Attach a synthesized DNF formula to the scene");
  scene(synth);

  auto* bounds = app.add_subcommand("bounds", "Lower-bound quantities for one spike");
  scene(bounds);
  bounds->add_option("--spike", o.spike, "Spike index, 2 <= i <= m-1")->required();

  auto* search = app.add_subcommand("search", "Exhaustive vertex-guard search");
  scene(search);
  search->add_option("--kmax", o.kmax, "Largest guard count to try")->capture_default_str();
  search->add_option("--budget", o.budget, "Time budget in seconds")->capture_default_str();

  auto* solveVertex = app.add_subcommand("solve-vertex", "Verified vertex-guard solution for a spike scene");
  scene(solveVertex);
  auto* solveGeneral = app.add_subcommand("solve-general", "Verified general-guard solution for a spike scene");
  scene(solveGeneral);

  auto* render = app.add_subcommand("render", "Render the scene as SVG");
  scene(render);
  render->add_option("--layers", o.layers, "Comma list of polygon,cones,cells,witnesses")->capture_default_str();
  render->add_option("--viewport", o.viewport, "xmin,ymin,xmax,ymax (default: fitted)");
  render->add_option("--width", o.width, "Image width in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return cmdGen(o);
    if (*verify) return cmdVerify(o);
    if (*decide) return cmdDecide(o);
    if (*synth) return cmdSynth(o);
    if (*bounds) return cmdBounds(o);
    if (*search) return cmdSearch(o);
    if (*solveVertex) return cmdSolve(o, SolutionKind::vertex);
    if (*solveGeneral) return cmdSolve(o, SolutionKind::general);
    if (*render) return cmdRender(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
