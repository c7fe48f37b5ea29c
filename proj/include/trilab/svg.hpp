#pragma once

#include <map>
#include <string>

#include "trilab/tiling.hpp"

namespace trilab {

enum class ColorBy { size, role };

// Renders the tiling to a standalone SVG document, one polygon per tile in
// tile order. With ColorBy::size, fills are assigned by the rank of each
// tile's diameter among the distinct diameters present; with ColorBy::role
// the `roles` map (tile index -> 'T' / 'L' / 'R') picks one of three fixed
// fills, and unmapped tiles are grey. Output is byte-deterministic.
std::string render_svg(const Tiling& t, ColorBy color_by,
                       const std::map<int, char>& roles = {});

}  // namespace trilab
