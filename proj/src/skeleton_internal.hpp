#pragma once

#include <vector>

#include "trilab/skeleton.hpp"

// Shared machinery between the skeleton analyses and the periodic-structure
// extractor. Not part of the public interface.
namespace trilab::detail {

// Tiles actually analyzed plus their merged skeleton. For periodic tilings
// the cell is translated over the 3x3 period block and clipped to the tiles
// whose interior meets the open window (the visible patch); cell_index maps
// each analysis tile back to the input tile it is a copy of.
struct AnalysisContext {
    std::vector<Triangle> tiles;
    std::vector<int> cell_index;
    Skeleton skeleton;
};

AnalysisContext make_analysis_context(const Tiling& t);

// Parameter on the line (cls, key) of its crossing with the line (cw, kw).
Rat crossing_param(int cls, const Rat& key, int cw, const Rat& kw);

// Whisker points of line (cls, key) restricted to [lo, hi] (open or closed):
// parameters where a transversal skeleton segment leaves the line strictly
// in direction w, with the available transversal length. Sorted by parameter.
std::vector<std::pair<Rat, Rat>> whisker_points(const Skeleton& skel, int cls, const Rat& key,
                                                const Rat& lo, const Rat& hi, bool open,
                                                Direction w);

struct CoreBox {
    bool everything = false;
    Rat a_lo, a_hi, b_lo, b_hi;
};

CoreBox make_core(const Tiling& t, const Rat& margin);
bool segment_meets_core(const MaximalSegment& m, const CoreBox& core);
std::vector<MaximalSegment> core_segments(const AnalysisContext& ctx, const Tiling& t,
                                          const Rat& margin);

// Tiles with a full side on a maximal segment, by flank (north = left of the
// canonical line direction), with their parameter intervals and analysis
// indices. ok means the flank exactly partitions the segment.
struct FlankEntry {
    Rat lo, hi;
    int tile;
};
struct Flanks {
    std::vector<FlankEntry> north, south;
    bool north_ok = false, south_ok = false;
};
Flanks compute_flanks(const AnalysisContext& ctx, const MaximalSegment& m);

SegmentNeighborhood neighborhood_in_context(const AnalysisContext& ctx, const Tiling& t,
                                            const MaximalSegment& m);

DescentStepResult descent_step(const Tiling& t, const AnalysisContext& ctx,
                               const EConfiguration& e);

}  // namespace trilab::detail
