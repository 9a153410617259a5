#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihom/grid.hpp"

namespace dihom::svg {

struct Layers {
  std::optional<grid::Region> shaded;  // e.g. the unsafe region
  std::vector<std::vector<grid::Point>> paths;
};

/// SVG document with viewBox = hull of the scene (y axis pointing up),
/// forbidden boxes hatched, the shaded region filled, paths as polylines.
std::string render(const grid::GridComplex& x, const Layers& layers = {});

}  // namespace dihom::svg
