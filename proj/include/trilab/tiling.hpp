#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilab/lattice.hpp"

namespace trilab {

enum class RegionKind { convex_polygon, plane_window };

// A convex region: either a convex lattice polygon (vertices counterclockwise,
// every edge a lattice segment, inner angles 60 or 120 degrees) or an
// axis-aligned window a_min <= a <= a_max, b_min <= b <= b_max in lattice
// coordinates, used as a viewport onto an unbounded tiling.
struct Region {
    RegionKind kind = RegionKind::convex_polygon;
    std::vector<LatticePoint> vertices;   // polygon only
    Rat a_min, a_max, b_min, b_max;       // window only

    static Region polygon(std::vector<LatticePoint> vs);
    static Region window(Rat a_min, Rat a_max, Rat b_min, Rat b_max);
};

// Throws std::invalid_argument when the region is structurally malformed
// (too few vertices, off-lattice or non-convex boundary, empty window, ...).
void check_region(const Region& r);

// Closed (strict=false) or open containment of a point in the region.
bool region_contains(const Region& r, const LatticePoint& p, bool strict = false);

// Area of a counterclockwise lattice polygon in lattice units (the unit
// up-triangle has area 1; multiply by sqrt(3)/4 for the Cartesian area).
Rat polygon_lat_area(const std::vector<LatticePoint>& vs);

struct Tiling {
    std::vector<Triangle> tiles;
    Region region;
    // When set, the tiles are one fundamental cell of a doubly periodic
    // tiling of the whole plane with these two independent period vectors.
    std::optional<std::pair<LatticePoint, LatticePoint>> periods;
};

enum class FailureKind { overlap, gap, outside, period_inconsistency };

struct ValidityFailure {
    FailureKind kind;
    int tile1 = -1;                        // overlap / period_inconsistency / outside
    int tile2 = -1;                        // overlap / period_inconsistency
    std::optional<LatticePoint> witness;   // gap / outside witness point
    std::string detail;
};

struct ValidityReport {
    bool valid = false;
    std::optional<ValidityFailure> failure;  // engaged exactly when !valid
};

// Checks that the tiles form a tiling: pairwise interior-disjoint, contained
// in the region (polygon case), and covering (polygon case: total tile area
// equals the region area; periodic case: a 3x3 block of period translates is
// interior-disjoint and the cell area equals the period parallelogram area).
// A plane_window tiling without periods is checked for disjointness and
// window containment only. Malformed inputs throw std::invalid_argument;
// validate() never throws for merely invalid tilings.
ValidityReport validate(const Tiling& t);

// Multiset of tile diameters (side lengths) with multiplicities.
std::map<Rat, int> diameter_multiset(const Tiling& t);

struct PerfectnessReport {
    bool perfect = false;
    std::string reason;  // non-empty when !perfect
};

// A tiling is perfect when its tiles are mutually incongruent, i.e. all
// diameters are distinct. A periodic tiling is never perfect: every tile
// recurs in each translate of the cell.
PerfectnessReport is_perfect(const Tiling& t);

// Unordered pairs of tile indices sharing a complete side (identical endpoint
// pair). For periodic tilings, adjacency across the 8 neighboring cell
// translates also counts; pairs are reported as cell-index pairs.
std::vector<std::pair<int, int>> shared_side_pairs(const Tiling& t);

// Smallest diameter over the tiles; throws on an empty tiling.
Rat inf_diameter(const Tiling& t);

// Upper bound for how many interior-disjoint equilateral triangles of
// diameter >= d can touch a disk of radius rho: every such triangle lies in
// the concentric disk of radius rho + d, so their count is at most
// floor(pi * (rho + d)^2 / (sqrt(3)/4 * d^2)). Evaluated with outward
// rounding of the transcendental constant; throws std::logic_error in the
// (unreached for sane inputs) case the enclosure cannot decide the floor.
Int packing_bound(const Rat& rho, const Rat& d);

}  // namespace trilab
