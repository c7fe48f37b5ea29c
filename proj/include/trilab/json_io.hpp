#pragma once

#include <string>

#include "trilab/tiling.hpp"

namespace trilab {

// Parses the tiling interchange format:
//   {
//     "tiles":  [ {"o": "up"|"down", "anchor": ["p/q","r/s"], "side": "u/v"}, ... ],
//     "region": {"kind": "convex_polygon", "vertices": [["p/q","r/s"], ...]}
//             | {"kind": "plane_window", "window": ["a_min","a_max","b_min","b_max"]},
//     "periods": [["p/q","r/s"], ["p/q","r/s"]]      // optional
//   }
// All numbers are exact rationals rendered as "num/den" (a bare integer
// string is accepted on input). Structural problems (bad JSON, missing or
// mistyped fields, malformed regions, zero denominators) throw
// std::invalid_argument or std::runtime_error.
Tiling parse_tiling(const std::string& text);

// Inverse of parse_tiling. Emits two-space-indented JSON with a trailing
// newline, rationals always written as "num/den" in lowest terms, fields in
// the fixed order tiles, region, periods. serialize(parse(x)) == serialize
// applied twice: the format round-trips bit-exactly.
std::string serialize_tiling(const Tiling& t);

Tiling load_tiling_file(const std::string& path);
void save_tiling_file(const Tiling& t, const std::string& path);

}  // namespace trilab
