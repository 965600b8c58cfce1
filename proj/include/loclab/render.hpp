#pragma once

// SVG output for scenes. Geometry is clipped exactly; coordinates are then
// rounded to 9 significant digits, the only approximation in the library.

#include "loclab/scene_io.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace loclab {

struct Viewport {
  Scalar xmin, ymin, xmax, ymax;
};

enum class Layer { polygon, cones, cells, witnesses };

/// An exterior and an interior point that no monotone formula can tell
/// apart.
struct WitnessPair {
  Point outside;
  Point inside;
};

struct RenderSpec {
  Viewport viewport;
  std::set<Layer> layers{Layer::polygon, Layer::cones};
  std::vector<WitnessPair> witnesses;
  int widthPx = 960;
};

class RenderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Layer parseLayer(const std::string& name);

/// Bounding box of the polygon and all guard apexes, padded on every side
/// by `pad` times the larger extent.
Viewport fitViewport(const Scene& scene, const Scalar& pad = Scalar(1, 10));

/// Turns a negative decision into a drawable pair. Prefers an exterior
/// point on the horizontal through the interior witness whose key set
/// contains the interior key set; falls back to the decision's own cells.
std::optional<WitnessPair> witnessPair(const Polygon& poly, std::span<const Guard> guards, const Decision& d);

/// Throws RenderError if the viewport is empty or does not contain the
/// polygon. Output is byte-identical for identical inputs.
std::string renderSVG(const Scene& scene, const RenderSpec& spec);

}  // namespace loclab
