#include "trilab/tlr.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "skeleton_internal.hpp"

namespace trilab {

namespace {

using detail::AnalysisContext;
using Cell = std::pair<long long, long long>;

// The tile's side lying on the given line, as a parameter interval.
std::optional<std::pair<Rat, Rat>> side_on_line(const Triangle& tile, int cls, const Rat& key) {
    for (const auto& side : triangle_sides(tile)) {
        const auto dir = segment_direction(side);
        if (line_class(dir->first) != cls) continue;
        if (line_key(cls, side.start) != key) continue;
        Rat lo = line_param(cls, side.start);
        Rat hi = line_param(cls, side.end);
        if (lo > hi) std::swap(lo, hi);
        return std::make_pair(lo, hi);
    }
    return std::nullopt;
}

// Which flank of the line the tile occupies: sign of the off-line vertex
// against the canonical line direction.
int flank_sign(const Triangle& tile, int cls, const Rat& key) {
    const LatticePoint uvec = direction_vector(class_direction(cls));
    for (const auto& v : triangle_vertices(tile)) {
        if (line_key(cls, v) != key) {
            LatticePoint base = v;
            for (const auto& w : triangle_vertices(tile)) {
                if (line_key(cls, w) == key) base = w;
            }
            return cross(uvec, v - base) > 0 ? 1 : -1;
        }
    }
    return 0;
}

struct Extractor {
    const Tiling& tiling;
    const AnalysisContext& ctx;
    int cls0 = 0;           // line class of every cell base segment
    bool mirrored = false;  // T tiles sit south of their base segment
    Direction frame_east = Direction::E;

    std::map<Cell, std::array<int, 3>> assigned;  // analysis indices T, L, R
    std::map<Cell, MaximalSegment> pending_segment;
    std::map<Cell, int> pending_t, pending_l, pending_r;
    std::set<Cell> done;
    std::deque<Cell> queue;

    void expect(std::map<Cell, int>& pending, const Cell& c, int tile) {
        const auto it = pending.find(c);
        if (it != pending.end() && it->second != tile) {
            throw std::runtime_error("conflicting structure assignment at cell (" +
                                     std::to_string(c.first) + ", " + std::to_string(c.second) +
                                     ")");
        }
        pending[c] = tile;
    }

    void enqueue(const Cell& c, const MaximalSegment& m) {
        const auto it = pending_segment.find(c);
        if (it != pending_segment.end()) {
            if (!(it->second == m)) {
                throw std::runtime_error("cell (" + std::to_string(c.first) + ", " +
                                         std::to_string(c.second) +
                                         ") reached along two different base segments");
            }
            return;
        }
        pending_segment.emplace(c, m);
        queue.push_back(c);
    }

    // Tiles with a full side on (cls, key) inside [lo, hi] on the given
    // flank, sorted by parameter; ok when they exactly partition [lo, hi].
    struct SpanCover {
        std::vector<detail::FlankEntry> tiles;
        bool exact = false;
    };
    SpanCover cover_span(int cls, const Rat& key, const Rat& lo, const Rat& hi, int flank) const {
        SpanCover out;
        for (std::size_t i = 0; i < ctx.tiles.size(); ++i) {
            const auto iv = side_on_line(ctx.tiles[i], cls, key);
            if (!iv || iv->first < lo || iv->second > hi) continue;
            if (flank_sign(ctx.tiles[i], cls, key) != flank) continue;
            out.tiles.push_back({iv->first, iv->second, int(i)});
        }
        std::sort(out.tiles.begin(), out.tiles.end(),
                  [](const detail::FlankEntry& x, const detail::FlankEntry& y) {
                      return x.lo < y.lo;
                  });
        out.exact = !out.tiles.empty() && out.tiles.front().lo == lo &&
                    out.tiles.back().hi == hi;
        for (std::size_t i = 1; out.exact && i < out.tiles.size(); ++i) {
            out.exact = (out.tiles[i].lo == out.tiles[i - 1].hi);
        }
        return out;
    }

    std::optional<MaximalSegment> maximal_on(int cls, const LatticePoint& p) const {
        const Rat key = line_key(cls, p);
        const auto iv = ctx.skeleton.interval_at(cls, key, line_param(cls, p));
        if (!iv) return std::nullopt;
        return MaximalSegment{cls, key, iv->first, iv->second};
    }

    void process(const Cell& cell, const MaximalSegment& m) {
        if (m.cls != cls0) {
            throw TopologyMismatchError("cell base segment is not parallel to the seed frame", m);
        }
        SegmentNeighborhood nb;
        try {
            nb = detail::neighborhood_in_context(ctx, tiling, m);
        } catch (const std::runtime_error&) {
            return;  // clipped by the window: leave this cell unindexed
        }
        if (nb.pattern != SegmentNeighborhood::Pattern::one_over_two) {
            throw TopologyMismatchError(
                "maximal segment neighborhood does not match the 1-over-2 pattern", m);
        }
        const bool cell_mirrored = (nb.n_south == 1);
        if (cell_mirrored != mirrored) {
            throw TopologyMismatchError("cell orientation contradicts the seed frame", m);
        }
        const detail::Flanks f = detail::compute_flanks(ctx, m);
        const auto& single = mirrored ? f.south : f.north;
        const auto& pair = mirrored ? f.north : f.south;
        const int t_idx = single[0].tile;
        const int l_idx = pair[0].tile;
        const int r_idx = pair[1].tile;

        const auto check_pending = [&](const std::map<Cell, int>& pending, int found,
                                       const char* role) {
            const auto it = pending.find(cell);
            if (it != pending.end() && it->second != found) {
                throw std::runtime_error(std::string("tile labeled ") + role + " at cell (" +
                                         std::to_string(cell.first) + ", " +
                                         std::to_string(cell.second) +
                                         ") contradicts an earlier assignment");
            }
        };
        check_pending(pending_t, t_idx, "T");
        check_pending(pending_l, l_idx, "L");
        check_pending(pending_r, r_idx, "R");
        assigned[cell] = {t_idx, l_idx, r_idx};

        // Geometry of the T tile relative to its base segment.
        const Triangle& T = ctx.tiles[t_idx];
        LatticePoint apex;
        std::vector<LatticePoint> on_line;
        for (const auto& v : triangle_vertices(T)) {
            if (line_key(m.cls, v) == m.key) {
                on_line.push_back(v);
            } else {
                apex = v;
            }
        }
        LatticePoint base_start = on_line[0], base_end = on_line[1];
        if (line_param(m.cls, base_end) < line_param(m.cls, base_start)) {
            std::swap(base_start, base_end);
        }

        const long long i = cell.first, j = cell.second;

        // The far side of each slanted side of T is split between a tile at
        // the base corner and a tile at the apex.
        struct SideSplit {
            bool found = false;
            int corner_tile = -1;
            int apex_tile = -1;
            Rat span_lo, span_hi;
            int cls = 0;
            Rat key;
        };
        const auto split_side = [&](const LatticePoint& corner) {
            SideSplit s;
            const Segment side{corner, apex};
            const auto dir = segment_direction(side);
            s.cls = line_class(dir->first);
            s.key = line_key(s.cls, corner);
            Rat lo = line_param(s.cls, corner);
            Rat hi = line_param(s.cls, apex);
            if (lo > hi) std::swap(lo, hi);
            s.span_lo = lo;
            s.span_hi = hi;
            const int t_flank = flank_sign(T, s.cls, s.key);
            const SpanCover cover = cover_span(s.cls, s.key, lo, hi, -t_flank);
            if (cover.exact && cover.tiles.size() == 1) {
                const auto witness = maximal_on(s.cls, corner);
                throw TopologyMismatchError(
                    "tile side is matched by a single opposite tile (shared side)",
                    witness ? *witness : MaximalSegment{s.cls, s.key, lo, hi});
            }
            if (!cover.exact || cover.tiles.size() != 2) return s;  // window frontier
            const Rat p_corner = line_param(s.cls, corner);
            s.found = true;
            if (p_corner == lo) {
                s.corner_tile = cover.tiles[0].tile;
                s.apex_tile = cover.tiles[1].tile;
            } else {
                s.corner_tile = cover.tiles[1].tile;
                s.apex_tile = cover.tiles[0].tile;
            }
            return s;
        };

        const SideSplit ne = split_side(base_end);    // abstract northeast side
        const SideSplit nw = split_side(base_start);  // abstract northwest side

        if (ne.found) {
            expect(pending_l, {i + 1, j + 1}, ne.corner_tile);
            expect(pending_r, {i, j + 2}, ne.apex_tile);
        }
        if (nw.found) {
            expect(pending_r, {i - 1, j + 1}, nw.corner_tile);
            expect(pending_l, {i, j + 2}, nw.apex_tile);
        }

        // North neighbor: its base runs through the apex.
        if (const auto seg = maximal_on(cls0, apex)) enqueue({i, j + 2}, *seg);

        // South-west neighbor: the joint far side of this cell's L and the
        // north-west corner tile is a full side of its T.
        if (nw.found) {
            const auto l_iv = side_on_line(ctx.tiles[l_idx], ne.cls,
                                           line_key(ne.cls, base_start));
            const auto r_iv = side_on_line(ctx.tiles[nw.corner_tile], ne.cls,
                                           line_key(ne.cls, base_start));
            if (l_iv && r_iv) {
                const Rat lo = std::min(l_iv->first, r_iv->first);
                const Rat hi = std::max(l_iv->second, r_iv->second);
                const int l_flank = flank_sign(ctx.tiles[l_idx], ne.cls,
                                               line_key(ne.cls, base_start));
                const SpanCover c =
                    cover_span(ne.cls, line_key(ne.cls, base_start), lo, hi, -l_flank);
                if (c.exact && c.tiles.size() == 1) {
                    const int tsw = c.tiles[0].tile;
                    expect(pending_t, {i - 1, j - 1}, tsw);
                    for (const auto& side : triangle_sides(ctx.tiles[tsw])) {
                        const auto dir = segment_direction(side);
                        if (line_class(dir->first) != cls0) continue;
                        if (const auto seg = maximal_on(cls0, side.start)) {
                            enqueue({i - 1, j - 1}, *seg);
                        }
                    }
                }
            }
        }

        // South-east neighbor, symmetrically via this cell's R and the
        // north-east corner tile.
        if (ne.found) {
            const auto r_iv = side_on_line(ctx.tiles[r_idx], nw.cls,
                                           line_key(nw.cls, base_end));
            const auto l_iv = side_on_line(ctx.tiles[ne.corner_tile], nw.cls,
                                           line_key(nw.cls, base_end));
            if (r_iv && l_iv) {
                const Rat lo = std::min(r_iv->first, l_iv->first);
                const Rat hi = std::max(r_iv->second, l_iv->second);
                const int r_flank = flank_sign(ctx.tiles[r_idx], nw.cls,
                                               line_key(nw.cls, base_end));
                const SpanCover c =
                    cover_span(nw.cls, line_key(nw.cls, base_end), lo, hi, -r_flank);
                if (c.exact && c.tiles.size() == 1) {
                    const int tse = c.tiles[0].tile;
                    expect(pending_t, {i + 1, j - 1}, tse);
                    for (const auto& side : triangle_sides(ctx.tiles[tse])) {
                        const auto dir = segment_direction(side);
                        if (line_class(dir->first) != cls0) continue;
                        if (const auto seg = maximal_on(cls0, side.start)) {
                            enqueue({i + 1, j - 1}, *seg);
                        }
                    }
                }
            }
        }
    }

    TLRIndexing run(const Rat& margin) {
        const auto seeds = detail::core_segments(ctx, tiling, margin);
        bool seeded = false;
        for (const auto& m : seeds) {
            SegmentNeighborhood nb;
            try {
                nb = detail::neighborhood_in_context(ctx, tiling, m);
            } catch (const std::runtime_error&) {
                continue;  // clipped: skip
            }
            if (nb.pattern != SegmentNeighborhood::Pattern::one_over_two) {
                throw TopologyMismatchError(
                    "maximal segment neighborhood does not match the 1-over-2 pattern", m);
            }
            cls0 = m.cls;
            mirrored = (nb.n_south == 1);
            frame_east = class_direction(cls0);
            enqueue({0, 0}, m);
            seeded = true;
            break;
        }
        if (!seeded) {
            throw std::runtime_error("no classifiable maximal segment in the core window");
        }
        while (!queue.empty()) {
            const Cell cell = queue.front();
            queue.pop_front();
            if (done.count(cell)) continue;
            done.insert(cell);
            process(cell, pending_segment.at(cell));
        }
        TLRIndexing out;
        out.frame_east = frame_east;
        out.mirrored = mirrored;
        for (const auto& [cell, trio] : assigned) {
            out.cells[cell] = TLRCell{ctx.cell_index[trio[0]], ctx.cell_index[trio[1]],
                                      ctx.cell_index[trio[2]]};
        }
        return out;
    }
};

}  // namespace

TLRIndexing extract_tlr_indexing(const Tiling& t, const Rat& margin) {
    if (t.region.kind != RegionKind::plane_window) {
        throw std::invalid_argument("structure extraction requires a plane_window region");
    }
    const AnalysisContext ctx = detail::make_analysis_context(t);
    Extractor ex{t, ctx};
    return ex.run(margin);
}

FamilyParams infer_alpha(const TLRIndexing& idx, const Tiling& t) {
    if (idx.cells.empty()) throw std::invalid_argument("empty structure index");
    const auto diam_of = [&](int tile) -> Rat {
        if (tile < 0 || tile >= int(t.tiles.size())) {
            throw std::invalid_argument("structure index refers to a missing tile");
        }
        return t.tiles[tile].side;
    };
    const auto cell_at = [&](long long i, long long j) -> const TLRCell* {
        const auto it = idx.cells.find({i, j});
        return it == idx.cells.end() ? nullptr : &it->second;
    };

    for (const auto& [cell, trio] : idx.cells) {
        if (diam_of(trio.t) != diam_of(trio.l) + diam_of(trio.r)) {
            throw InferAlphaError("sum_cell", cell.first, cell.second);
        }
    }
    for (const auto& [cell, trio] : idx.cells) {
        const TLRCell* ne = cell_at(cell.first + 1, cell.second + 1);
        const TLRCell* nn = cell_at(cell.first, cell.second + 2);
        if (ne && nn && diam_of(trio.t) != diam_of(ne->l) + diam_of(nn->r)) {
            throw InferAlphaError("sum_northeast_split", cell.first, cell.second);
        }
    }
    for (const auto& [cell, trio] : idx.cells) {
        const TLRCell* nw = cell_at(cell.first - 1, cell.second + 1);
        const TLRCell* nn = cell_at(cell.first, cell.second + 2);
        if (nw && nn && diam_of(trio.t) != diam_of(nn->l) + diam_of(nw->r)) {
            throw InferAlphaError("sum_northwest_split", cell.first, cell.second);
        }
    }
    const auto first = idx.cells.begin();
    const Rat t_diam = diam_of(first->second.t);
    for (const auto& [cell, trio] : idx.cells) {
        if (diam_of(trio.t) != t_diam) {
            throw InferAlphaError("t_constant", cell.first, cell.second);
        }
    }
    for (const auto& [cell, trio] : idx.cells) {
        const TLRCell* nn = cell_at(cell.first, cell.second + 2);
        if (nn && diam_of(nn->l) != diam_of(trio.l)) {
            throw InferAlphaError("l_constant_north", cell.first, cell.second);
        }
        const TLRCell* ne = cell_at(cell.first + 1, cell.second + 1);
        if (ne && diam_of(ne->l) != diam_of(trio.l)) {
            throw InferAlphaError("l_constant_northeast", cell.first, cell.second);
        }
    }

    Rat alpha = diam_of(first->second.l) / t_diam;
    if (alpha > make_rat(1, 2)) alpha = 1 - alpha;
    return FamilyParams{alpha};
}

std::map<std::pair<long long, long long>, Rat> t_diameter_field(const TLRIndexing& idx,
                                                                const Tiling& t) {
    std::map<std::pair<long long, long long>, Rat> out;
    for (const auto& [cell, trio] : idx.cells) {
        if (trio.t < 0 || trio.t >= int(t.tiles.size())) {
            throw std::invalid_argument("structure index refers to a missing tile");
        }
        out[cell] = t.tiles[trio.t].side;
    }
    return out;
}

}  // namespace trilab
