#include "trilab/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "skeleton_internal.hpp"

namespace trilab {

std::optional<std::pair<Rat, Rat>> Skeleton::interval_at(int cls, const Rat& key,
                                                         const Rat& t) const {
    const auto it = lines[cls].find(key);
    if (it == lines[cls].end()) return std::nullopt;
    for (const auto& iv : it->second) {
        if (iv.first <= t && t <= iv.second) return iv;
        if (iv.first > t) break;
    }
    return std::nullopt;
}

std::optional<Rat> Skeleton::extension(const LatticePoint& p, Direction d) const {
    const int cls = line_class(d);
    const Rat t = line_param(cls, p);
    const auto iv = interval_at(cls, line_key(cls, p), t);
    if (!iv) return std::nullopt;
    const bool positive = (d == class_direction(cls));
    const Rat room = positive ? iv->second - t : t - iv->first;
    if (room <= 0) return std::nullopt;
    return room;
}

namespace detail {

namespace {

// Strict separating-axis test of a tile interior against the open window.
bool tile_meets_window(const Triangle& tile, const Region& r) {
    const BoundingBox box = bounding_box(tile);
    if (box.a_max <= r.a_min || box.a_min >= r.a_max) return false;
    if (box.b_max <= r.b_min || box.b_min >= r.b_max) return false;
    Rat s_lo = box.a_max + box.b_max, s_hi = box.a_min + box.b_min;
    for (const auto& v : triangle_vertices(tile)) {
        s_lo = std::min(s_lo, Rat(v.a + v.b));
        s_hi = std::max(s_hi, Rat(v.a + v.b));
    }
    return s_hi > r.a_min + r.b_min && s_lo < r.a_max + r.b_max;
}

}  // namespace

AnalysisContext make_analysis_context(const Tiling& t) {
    const ValidityReport rep = validate(t);
    if (!rep.valid) {
        throw std::invalid_argument("cannot analyze an invalid tiling: " +
                                    (rep.failure ? rep.failure->detail : std::string()));
    }
    AnalysisContext ctx;
    if (t.periods) {
        const auto& [p1, p2] = *t.periods;
        for (int di = -1; di <= 1; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
                const LatticePoint shift = Rat(di) * p1 + Rat(dj) * p2;
                for (std::size_t i = 0; i < t.tiles.size(); ++i) {
                    Triangle tr = t.tiles[i];
                    tr.anchor = tr.anchor + shift;
                    if (t.region.kind == RegionKind::plane_window &&
                        !tile_meets_window(tr, t.region)) {
                        continue;
                    }
                    ctx.tiles.push_back(tr);
                    ctx.cell_index.push_back(int(i));
                }
            }
        }
    } else {
        ctx.tiles = t.tiles;
        ctx.cell_index.resize(t.tiles.size());
        std::iota(ctx.cell_index.begin(), ctx.cell_index.end(), 0);
    }

    std::array<std::map<Rat, std::vector<std::pair<Rat, Rat>>>, 3> raw;
    for (const auto& tile : ctx.tiles) {
        for (const auto& side : triangle_sides(tile)) {
            const auto dir = segment_direction(side);
            const int cls = line_class(dir->first);
            const Rat key = line_key(cls, side.start);
            Rat lo = line_param(cls, side.start);
            Rat hi = line_param(cls, side.end);
            if (lo > hi) std::swap(lo, hi);
            raw[cls][key].emplace_back(lo, hi);
        }
    }
    for (int cls = 0; cls < 3; ++cls) {
        for (auto& [key, ivs] : raw[cls]) {
            std::sort(ivs.begin(), ivs.end());
            std::vector<std::pair<Rat, Rat>> merged;
            for (const auto& iv : ivs) {
                if (!merged.empty() && iv.first <= merged.back().second) {
                    merged.back().second = std::max(merged.back().second, iv.second);
                } else {
                    merged.push_back(iv);
                }
            }
            ctx.skeleton.lines[cls][key] = merged;
            for (const auto& iv : merged) {
                ctx.skeleton.segments.push_back({cls, key, iv.first, iv.second});
            }
        }
    }
    std::sort(ctx.skeleton.segments.begin(), ctx.skeleton.segments.end());
    return ctx;
}

Rat crossing_param(int cls, const Rat& key, int cw, const Rat& kw) {
    switch (cls) {
        case 0: return cw == 1 ? kw : kw - key;
        case 1: return cw == 0 ? kw : kw - key;
        default: return cw == 0 ? kw : key - kw;
    }
}

std::vector<std::pair<Rat, Rat>> whisker_points(const Skeleton& skel, int cls, const Rat& key,
                                                const Rat& lo, const Rat& hi, bool open,
                                                Direction w) {
    std::vector<std::pair<Rat, Rat>> out;
    const int cw = line_class(w);
    const bool positive = (w == class_direction(cw));
    for (const auto& [kw, intervals] : skel.lines[cw]) {
        const Rat t = crossing_param(cls, key, cw, kw);
        if (open ? (t <= lo || t >= hi) : (t < lo || t > hi)) continue;
        const LatticePoint p = line_point(cls, key, t);
        const Rat tm = line_param(cw, p);
        for (const auto& iv : intervals) {
            if (iv.first <= tm && tm <= iv.second) {
                const Rat room = positive ? iv.second - tm : tm - iv.first;
                if (room > 0) out.emplace_back(t, room);
                break;
            }
            if (iv.first > tm) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CoreBox make_core(const Tiling& t, const Rat& margin) {
    CoreBox core;
    if (t.region.kind != RegionKind::plane_window) {
        core.everything = true;
        return core;
    }
    Rat max_side = 0;
    for (const auto& tile : t.tiles) max_side = std::max(max_side, tile.side);
    if (margin < max_side) {
        throw std::invalid_argument("margin " + rat_to_string(margin) +
                                    " is smaller than the largest tile side " +
                                    rat_to_string(max_side));
    }
    core.a_lo = t.region.a_min + margin;
    core.a_hi = t.region.a_max - margin;
    core.b_lo = t.region.b_min + margin;
    core.b_hi = t.region.b_max - margin;
    if (core.a_lo > core.a_hi || core.b_lo > core.b_hi) {
        throw std::invalid_argument("margin too small: it leaves an empty core window");
    }
    return core;
}

bool segment_meets_core(const MaximalSegment& m, const CoreBox& core) {
    if (core.everything) return true;
    Rat lo = m.t0, hi = m.t1;
    switch (m.cls) {
        case 0:
            if (m.key < core.b_lo || m.key > core.b_hi) return false;
            lo = std::max(lo, core.a_lo);
            hi = std::min(hi, core.a_hi);
            break;
        case 1:
            if (m.key < core.a_lo || m.key > core.a_hi) return false;
            lo = std::max(lo, core.b_lo);
            hi = std::min(hi, core.b_hi);
            break;
        default:
            lo = std::max(lo, std::max(core.b_lo, Rat(m.key - core.a_hi)));
            hi = std::min(hi, std::min(core.b_hi, Rat(m.key - core.a_lo)));
            break;
    }
    return lo <= hi;
}

std::vector<MaximalSegment> core_segments(const AnalysisContext& ctx, const Tiling& t,
                                          const Rat& margin) {
    const CoreBox core = make_core(t, margin);
    std::vector<MaximalSegment> out;
    for (const auto& m : ctx.skeleton.segments) {
        if (segment_meets_core(m, core)) out.push_back(m);
    }
    return out;
}

namespace {

void sort_configurations(std::vector<EConfiguration>& out) {
    std::sort(out.begin(), out.end(), [](const EConfiguration& x, const EConfiguration& y) {
        const auto dx = segment_direction({x.base.start, x.base.end});
        const auto dy = segment_direction({y.base.start, y.base.end});
        const int cx = line_class(dx->first), cy = line_class(dy->first);
        if (cx != cy) return cx < cy;
        if (!(x.base.start == y.base.start)) return x.base.start < y.base.start;
        if (!(x.base.end == y.base.end)) return x.base.end < y.base.end;
        if (x.whisker_direction != y.whisker_direction) {
            return int(x.whisker_direction) < int(y.whisker_direction);
        }
        if (x.interior_point.has_value() != y.interior_point.has_value()) {
            return !x.interior_point.has_value();
        }
        if (x.interior_point && y.interior_point && !(*x.interior_point == *y.interior_point)) {
            return *x.interior_point < *y.interior_point;
        }
        return x.whisker_length < y.whisker_length;
    });
}

}  // namespace

Flanks compute_flanks(const AnalysisContext& ctx, const MaximalSegment& m) {
    const LatticePoint uvec = direction_vector(class_direction(m.cls));
    Flanks f;
    for (std::size_t i = 0; i < ctx.tiles.size(); ++i) {
        for (const auto& side : triangle_sides(ctx.tiles[i])) {
            const auto dir = segment_direction(side);
            if (line_class(dir->first) != m.cls) continue;
            if (line_key(m.cls, side.start) != m.key) continue;
            Rat lo = line_param(m.cls, side.start);
            Rat hi = line_param(m.cls, side.end);
            if (lo > hi) std::swap(lo, hi);
            if (lo < m.t0 || hi > m.t1) continue;  // side of another segment on this line
            LatticePoint third;
            for (const auto& v : triangle_vertices(ctx.tiles[i])) {
                if (line_key(m.cls, v) != m.key) third = v;
            }
            const Rat sign = cross(uvec, third - side.start);
            (sign > 0 ? f.north : f.south).push_back({lo, hi, int(i)});
        }
    }
    const auto prepare = [&](std::vector<FlankEntry>& v) {
        std::sort(v.begin(), v.end(),
                  [](const FlankEntry& x, const FlankEntry& y) { return x.lo < y.lo; });
        if (v.empty()) return false;
        if (v.front().lo != m.t0 || v.back().hi != m.t1) return false;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i].lo != v[i - 1].hi) return false;
        }
        return true;
    };
    f.north_ok = prepare(f.north);
    f.south_ok = prepare(f.south);
    return f;
}

SegmentNeighborhood neighborhood_in_context(const AnalysisContext& ctx, const Tiling& t,
                                            const MaximalSegment& m) {
    const Flanks f = compute_flanks(ctx, m);
    const bool windowed = (t.region.kind == RegionKind::plane_window);
    if (windowed && (!f.north_ok || !f.south_ok)) {
        throw std::runtime_error("maximal segment neighborhood is clipped by the window");
    }

    SegmentNeighborhood nb;
    nb.n_north = int(f.north.size());
    nb.n_south = int(f.south.size());
    for (const auto& e : f.north) nb.north_tiles.push_back(ctx.cell_index[e.tile]);
    for (const auto& e : f.south) nb.south_tiles.push_back(ctx.cell_index[e.tile]);

    // Bounding segments: transversal maximal segments containing an endpoint
    // of m as a relatively interior point.
    const auto bound_classes = [&](const Rat& param) {
        std::vector<int> found;
        const LatticePoint p = line_point(m.cls, m.key, param);
        for (int cw = 0; cw < 3; ++cw) {
            if (cw == m.cls) continue;
            const Rat tm = line_param(cw, p);
            const auto iv = ctx.skeleton.interval_at(cw, line_key(cw, p), tm);
            if (iv && iv->first < tm && tm < iv->second) found.push_back(cw);
        }
        return found;
    };
    const auto west = bound_classes(m.t0);
    const auto east = bound_classes(m.t1);
    if (windowed && (west.empty() || east.empty())) {
        throw std::runtime_error(
            "maximal segment endpoint has no bounding segment inside the window");
    }
    if (west.size() == 1) nb.west_bound_direction = class_direction(west[0]);
    if (east.size() == 1) nb.east_bound_direction = class_direction(east[0]);

    nb.pattern = SegmentNeighborhood::Pattern::other;
    if (f.north_ok && f.south_ok) {
        const Direction u = class_direction(m.cls);
        const int cls_nw = line_class(rotate(u, 2));
        const int cls_ne = line_class(rotate(u, 1));
        const bool straight = nb.n_north == 1 && nb.n_south == 2 && west.size() == 1 &&
                              east.size() == 1 && west[0] == cls_nw && east[0] == cls_ne;
        const bool mirrored = nb.n_north == 2 && nb.n_south == 1 && west.size() == 1 &&
                              east.size() == 1 && west[0] == cls_ne && east[0] == cls_nw;
        if (straight || mirrored) nb.pattern = SegmentNeighborhood::Pattern::one_over_two;
    }
    return nb;
}

namespace {

std::optional<int> find_corner_tile(const AnalysisContext& ctx, const LatticePoint& corner,
                                    Direction d, int chi) {
    const LatticePoint dvec = direction_vector(d);
    for (std::size_t i = 0; i < ctx.tiles.size(); ++i) {
        const auto verts = triangle_vertices(ctx.tiles[i]);
        int at = -1;
        for (int k = 0; k < 3; ++k) {
            if (verts[k] == corner) at = k;
        }
        if (at < 0) continue;
        const LatticePoint along = corner + ctx.tiles[i].side * dvec;
        int other = -1;
        for (int k = 0; k < 3; ++k) {
            if (k != at && verts[k] == along) other = k;
        }
        if (other < 0) continue;
        const LatticePoint third = verts[3 - at - other];
        const Rat s = cross(dvec, third - corner);
        if ((chi > 0 && s > 0) || (chi < 0 && s < 0)) return int(i);
    }
    return std::nullopt;
}

}  // namespace

DescentStepResult descent_step(const Tiling& t, const AnalysisContext& ctx,
                               const EConfiguration& e) {
    EConfiguration conf = e;
    {
        const auto based = segment_direction({conf.base.start, conf.base.end});
        if (!based) throw std::invalid_argument("degenerate configuration base");
        if (int(based->first) >= 3) std::swap(conf.base.start, conf.base.end);
    }
    const auto based = segment_direction({conf.base.start, conf.base.end});
    const Direction u = based->first;
    const Rat lambda = based->second;
    const Direction w = conf.whisker_direction;
    const int k = (int(w) - int(u) + 6) % 6;
    if (k == 0 || k == 3) throw std::invalid_argument("whisker direction collinear with base");

    // Work from the base endpoint at the whisker-side corner of a base tile:
    // the start when the whiskers lean backward (w = u +- 120 degrees),
    // otherwise the end, viewed against the base direction.
    Direction d = u;
    LatticePoint x1 = conf.base.start;
    if (k == 1 || k == 5) {
        d = opposite(u);
        x1 = conf.base.end;
    }
    const int chi = cross(direction_vector(d), direction_vector(w)) > 0 ? 1 : -1;
    const bool windowed = (t.region.kind == RegionKind::plane_window);

    const auto missing = [&](const std::string& what) -> DescentStepResult {
        if (windowed) {
            DescentStepResult r;
            r.terminal = DescentTerminal::window_exhausted;
            r.note = what;
            return r;
        }
        throw std::invalid_argument("configuration is not supported by the tiling: " + what);
    };

    const auto t1 = find_corner_tile(ctx, x1, d, chi);
    if (!t1) return missing("no tile with a base-aligned side at the whisker corner");
    const Rat s1 = ctx.tiles[*t1].side;
    if (s1 >= lambda) {
        DescentStepResult r;
        r.terminal = DescentTerminal::base_exhausted;
        r.t1_index = ctx.cell_index[*t1];
        r.note = "base covered by a single tile";
        return r;
    }
    const LatticePoint x2 = x1 + s1 * direction_vector(d);
    const LatticePoint x3 = x1 + s1 * direction_vector(rotate(d, chi));

    const auto t2 = find_corner_tile(ctx, x2, d, chi);
    if (!t2) return missing("no successor tile along the base");

    EConfiguration next;
    BasisChoice choice;
    if (ctx.skeleton.extension(x3, d)) {
        choice = BasisChoice::end_to_apex;
        next.base = {x2, x3};
        next.whisker_direction = d;
    } else if (ctx.skeleton.extension(x3, w)) {
        choice = BasisChoice::start_to_apex;
        next.base = {x1, x3};
        next.whisker_direction = w;
    } else {
        return missing("skeleton does not extend from the apex of the corner tile");
    }

    // Canonicalize the new base to increasing line parameter.
    {
        const auto nd = segment_direction({next.base.start, next.base.end});
        if (int(nd->first) >= 3) std::swap(next.base.start, next.base.end);
    }
    const auto nd = segment_direction({next.base.start, next.base.end});
    const int ncls = line_class(nd->first);
    const Rat nkey = line_key(ncls, next.base.start);
    const Rat nlo = line_param(ncls, next.base.start);
    const Rat nhi = line_param(ncls, next.base.end);

    const auto room_start = ctx.skeleton.extension(next.base.start, next.whisker_direction);
    const auto room_end = ctx.skeleton.extension(next.base.end, next.whisker_direction);
    if (!room_start || !room_end) {
        throw std::logic_error("descent step lost its end whiskers");
    }
    Rat eps = std::min(*room_start, *room_end);
    const auto inner =
        whisker_points(ctx.skeleton, ncls, nkey, nlo, nhi, true, next.whisker_direction);
    if (!inner.empty()) {
        next.interior_point = line_point(ncls, nkey, inner.front().first);
        eps = std::min(eps, inner.front().second);
    }
    next.whisker_length = eps;

    if (next.lambda() != s1) {
        throw std::logic_error("descent basis length is not the corner tile side");
    }
    if (next.lambda() > lambda - inf_diameter(t)) {
        throw std::logic_error("descent step failed to shrink the base");
    }

    DescentStepResult r;
    r.next = std::move(next);
    r.basis_choice = choice;
    r.t1_index = ctx.cell_index[*t1];
    r.t2_index = ctx.cell_index[*t2];
    return r;
}

}  // namespace detail

Skeleton build_skeleton(const Tiling& t) { return detail::make_analysis_context(t).skeleton; }

Rat EConfiguration::lambda() const {
    const auto d = segment_direction({base.start, base.end});
    if (!d) throw std::logic_error("degenerate configuration base");
    return d->second;
}

std::optional<Rat> EConfiguration::mu() const {
    if (!interior_point) return std::nullopt;
    const auto d = segment_direction({base.start, base.end});
    const int cls = line_class(d->first);
    const Rat t0 = line_param(cls, base.start);
    const Rat t1 = line_param(cls, base.end);
    return (line_param(cls, *interior_point) - t0) / (t1 - t0);
}

std::vector<EConfiguration> find_e_configurations(const Tiling& t, const Rat& margin,
                                                  bool all_witnesses) {
    const detail::AnalysisContext ctx = detail::make_analysis_context(t);
    const auto candidates = detail::core_segments(ctx, t, margin);
    std::vector<EConfiguration> out;
    for (const auto& m : candidates) {
        for (int wi = 0; wi < 6; ++wi) {
            const Direction w = Direction(wi);
            if (line_class(w) == m.cls) continue;
            const auto pts =
                detail::whisker_points(ctx.skeleton, m.cls, m.key, m.t0, m.t1, false, w);
            if (pts.size() < 3) continue;
            const auto make = [&](std::size_t a, std::size_t b, std::size_t c) {
                EConfiguration e;
                e.base = {line_point(m.cls, m.key, pts[a].first),
                          line_point(m.cls, m.key, pts[c].first)};
                e.interior_point = line_point(m.cls, m.key, pts[b].first);
                e.whisker_direction = w;
                e.whisker_length = std::min({pts[a].second, pts[b].second, pts[c].second});
                return e;
            };
            if (all_witnesses) {
                for (std::size_t a = 0; a + 2 < pts.size(); ++a) {
                    for (std::size_t b = a + 1; b + 1 < pts.size(); ++b) {
                        for (std::size_t c = b + 1; c < pts.size(); ++c) {
                            out.push_back(make(a, b, c));
                        }
                    }
                }
            } else {
                out.push_back(make(0, 1, pts.size() - 1));
            }
        }
    }
    detail::sort_configurations(out);
    return out;
}

std::vector<EConfiguration> brute_force_e_configurations(const Tiling& t, const Rat& margin) {
    const detail::AnalysisContext ctx = detail::make_analysis_context(t);

    // Independent merge: repeatedly fuse any two collinear touching or
    // overlapping sides until nothing changes.
    struct RawSeg {
        int cls;
        Rat key, lo, hi;
    };
    std::vector<RawSeg> segs;
    for (const auto& tile : ctx.tiles) {
        for (const auto& side : triangle_sides(tile)) {
            const auto dir = segment_direction(side);
            const int cls = line_class(dir->first);
            Rat lo = line_param(cls, side.start);
            Rat hi = line_param(cls, side.end);
            if (lo > hi) std::swap(lo, hi);
            segs.push_back({cls, line_key(cls, side.start), lo, hi});
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < segs.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < segs.size() && !changed; ++j) {
                if (segs[i].cls != segs[j].cls || segs[i].key != segs[j].key) continue;
                if (segs[j].lo <= segs[i].hi && segs[i].lo <= segs[j].hi) {
                    segs[i].lo = std::min(segs[i].lo, segs[j].lo);
                    segs[i].hi = std::max(segs[i].hi, segs[j].hi);
                    segs.erase(segs.begin() + std::ptrdiff_t(j));
                    changed = true;
                }
            }
        }
    }
    std::sort(segs.begin(), segs.end(), [](const RawSeg& x, const RawSeg& y) {
        return std::tie(x.cls, x.key, x.lo, x.hi) < std::tie(y.cls, y.key, y.lo, y.hi);
    });

    const detail::CoreBox core = detail::make_core(t, margin);
    std::vector<EConfiguration> out;
    for (const auto& s : segs) {
        const MaximalSegment m{s.cls, s.key, s.lo, s.hi};
        if (!detail::segment_meets_core(m, core)) continue;
        for (int wi = 0; wi < 6; ++wi) {
            const Direction w = Direction(wi);
            const int cw = line_class(w);
            if (cw == s.cls) continue;
            const bool positive = (w == class_direction(cw));
            std::vector<std::pair<Rat, Rat>> pts;
            for (const auto& other : segs) {
                if (other.cls != cw) continue;
                const Rat tt = detail::crossing_param(s.cls, s.key, cw, other.key);
                if (tt < s.lo || tt > s.hi) continue;
                const LatticePoint p = line_point(s.cls, s.key, tt);
                const Rat tm = line_param(cw, p);
                if (tm < other.lo || tm > other.hi) continue;
                const Rat room = positive ? other.hi - tm : tm - other.lo;
                if (room > 0) pts.emplace_back(tt, room);
            }
            std::sort(pts.begin(), pts.end());
            for (std::size_t a = 0; a + 2 < pts.size(); ++a) {
                for (std::size_t b = a + 1; b + 1 < pts.size(); ++b) {
                    for (std::size_t c = b + 1; c < pts.size(); ++c) {
                        EConfiguration e;
                        e.base = {line_point(s.cls, s.key, pts[a].first),
                                  line_point(s.cls, s.key, pts[c].first)};
                        e.interior_point = line_point(s.cls, s.key, pts[b].first);
                        e.whisker_direction = w;
                        e.whisker_length = std::min({pts[a].second, pts[b].second, pts[c].second});
                        out.push_back(e);
                    }
                }
            }
        }
    }
    detail::sort_configurations(out);
    return out;
}

SegmentNeighborhood neighborhood_topology(const Tiling& t, const MaximalSegment& m) {
    const detail::AnalysisContext ctx = detail::make_analysis_context(t);
    return detail::neighborhood_in_context(ctx, t, m);
}

DescentStepResult next_e_configuration(const Tiling& t, const EConfiguration& e) {
    const detail::AnalysisContext ctx = detail::make_analysis_context(t);
    return detail::descent_step(t, ctx, e);
}

DescentTrace descend(const Tiling& t, const EConfiguration& e, int max_steps) {
    if (max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
    const detail::AnalysisContext ctx = detail::make_analysis_context(t);
    DescentTrace trace;
    trace.steps.push_back(e);
    trace.lengths.push_back(e.lambda());
    trace.terminal = DescentTrace::Terminal::max_steps;
    EConfiguration cur = e;
    for (int step = 0; step < max_steps; ++step) {
        const DescentStepResult r = detail::descent_step(t, ctx, cur);
        if (r.terminal == DescentTerminal::window_exhausted) {
            trace.terminal = DescentTrace::Terminal::window_exhausted;
            trace.note = r.note;
            break;
        }
        if (r.terminal == DescentTerminal::base_exhausted) {
            trace.terminal = DescentTrace::Terminal::base_exhausted;
            trace.note = r.note;
            break;
        }
        cur = *r.next;
        trace.steps.push_back(cur);
        trace.lengths.push_back(cur.lambda());
        trace.choices.push_back(*r.basis_choice);
    }
    return trace;
}

}  // namespace trilab
