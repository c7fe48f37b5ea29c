#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "trilab/generators.hpp"
#include "trilab/skeleton.hpp"

namespace trilab {

// Role assignment of tiles discovered around one cell of the periodic
// three-triangle structure. Indices refer to Tiling::tiles.
struct TLRCell {
    int t = -1;
    int l = -1;
    int r = -1;
};

// Cells are indexed on the even sublattice {(i, j) : i + j even}; (0, 0) is
// anchored at the first classifiable maximal segment in canonical order.
// The frame records how the abstract cell grid sits in the lattice:
// abstract east maps to frame_east, and abstract northeast to 60 degrees
// counterclockwise (mirrored = false) or clockwise (mirrored = true) of it.
struct TLRIndexing {
    std::map<std::pair<long long, long long>, TLRCell> cells;
    Direction frame_east = Direction::E;
    bool mirrored = false;
};

struct TopologyMismatchError : std::runtime_error {
    MaximalSegment witness;
    TopologyMismatchError(const std::string& msg, MaximalSegment w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};

// Walks the tiling structure outward from a seed maximal segment matching
// the 1-over-2 neighborhood pattern, labeling tiles T/L/R per cell. Works on
// plane_window tilings; cells whose data is clipped by the window are
// skipped, a neighborhood contradicting the pattern raises
// TopologyMismatchError with the offending segment as witness.
TLRIndexing extract_tlr_indexing(const Tiling& t, const Rat& margin);

struct InferAlphaError : std::runtime_error {
    std::string equation;
    long long i, j;
    InferAlphaError(const std::string& eq, long long i_, long long j_)
        : std::runtime_error("equation " + eq + " fails at cell (" + std::to_string(i_) + ", " +
                             std::to_string(j_) + ")"),
          equation(eq),
          i(i_),
          j(j_) {}
};

// Verifies the additive side-length equations of the indexed structure
// (T = L + R within each cell and across the two diagonal neighbor splits,
// constancy of T and of L across cells) and returns the normalized family
// parameter alpha = diam L / diam T, mirrored into (0, 1/2] by swapping the
// L and R roles if needed. Violations raise InferAlphaError naming the
// equation and cell.
FamilyParams infer_alpha(const TLRIndexing& idx, const Tiling& t);

// Diameter of the T tile per cell index; the discrete field whose
// combinatorial harmonicity the walk module checks.
std::map<std::pair<long long, long long>, Rat> t_diameter_field(const TLRIndexing& idx,
                                                                const Tiling& t);

}  // namespace trilab
