#pragma once

#include "wbinom/paths.hpp"

#include <string>
#include <vector>

namespace wb {

// Grid, shaded weight cells (blue for w, orange for w^-1, hatched negative
// corners) and the path, with combos drawn as rounded corners.
std::string render_svg(const HybridPath& p);

// All paths side by side, one panel each.
std::string render_svg_grid(const std::vector<HybridPath>& paths, int columns = 4);

}  // namespace wb
