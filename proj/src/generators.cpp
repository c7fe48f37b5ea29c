#include "trilab/generators.hpp"

#include <algorithm>

namespace trilab {

Tiling generate_family(const FamilyParams& params, int reps) {
    const Rat& alpha = params.alpha;
    if (alpha <= 0 || alpha > make_rat(1, 2)) {
        throw std::invalid_argument("family parameter alpha must lie in (0, 1/2]");
    }
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");
    const LatticePoint t_ne{1 - alpha, alpha};
    const LatticePoint t_n{-alpha, Rat(1)};

    Tiling t;
    for (int v = 0; v < reps; ++v) {
        for (int u = 0; u < reps; ++u) {
            const LatticePoint o = Rat(u) * t_ne + Rat(v) * t_n;
            t.tiles.push_back({Orientation::up, o, Rat(1)});
            t.tiles.push_back({Orientation::down, o, alpha});
            t.tiles.push_back({Orientation::down, {o.a + alpha, o.b}, 1 - alpha});
        }
    }
    t.periods = std::make_pair(Rat(reps) * t_ne, Rat(reps) * t_n);

    BoundingBox box = bounding_box(t.tiles[0]);
    for (const auto& tile : t.tiles) {
        const BoundingBox b = bounding_box(tile);
        box.a_min = std::min(box.a_min, b.a_min);
        box.a_max = std::max(box.a_max, b.a_max);
        box.b_min = std::min(box.b_min, b.b_min);
        box.b_max = std::max(box.b_max, b.b_max);
    }
    t.region = Region::window(box.a_min, box.a_max, box.b_min, box.b_max);
    return t;
}

namespace {

LatticePoint lp(int a, int b) { return {Rat(a), Rat(b)}; }

Triangle up(int a, int b, int s = 1) { return {Orientation::up, lp(a, b), Rat(s)}; }
Triangle down(int a, int b, int s = 1) { return {Orientation::down, lp(a, b), Rat(s)}; }

}  // namespace

Tiling generate_polygon_sample(int variant) {
    Tiling t;
    switch (variant) {
        case 1:
            t.tiles = {up(0, 0), up(1, 0), up(0, 1), down(0, 1)};
            t.region = Region::polygon({lp(0, 0), lp(2, 0), lp(0, 2)});
            break;
        case 2:
            t.tiles = {up(0, 0), down(0, 1)};
            t.region = Region::polygon({lp(0, 0), lp(1, 0), lp(1, 1), lp(0, 1)});
            break;
        case 3:
            t.tiles = {up(0, 0), up(1, 0), down(0, 1)};
            t.region = Region::polygon({lp(0, 0), lp(2, 0), lp(1, 1), lp(0, 1)});
            break;
        case 4:
            t.tiles = {up(0, 0, 2), down(1, 1), up(1, 1), down(0, 2)};
            t.region = Region::polygon({lp(0, 0), lp(2, 0), lp(2, 1), lp(1, 2), lp(0, 2)});
            break;
        case 5:
            t.tiles = {up(0, 0), down(0, 1), up(0, 1), down(-1, 2), up(-1, 1), down(-1, 1)};
            t.region = Region::polygon(
                {lp(0, 0), lp(1, 0), lp(1, 1), lp(0, 2), lp(-1, 2), lp(-1, 1)});
            break;
        default:
            throw std::invalid_argument("sample variant must be between 1 and 5");
    }
    return t;
}

Tiling generate_hexagonal(int n) {
    if (n < 1) throw std::invalid_argument("hexagonal grid size must be at least 1");
    Tiling t;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            t.tiles.push_back({Orientation::up, lp(i, j), Rat(1)});
            t.tiles.push_back({Orientation::down, lp(i, j + 1), Rat(1)});
        }
    }
    t.region = Region::window(Rat(0), Rat(n), Rat(0), Rat(n));
    t.periods = std::make_pair(lp(n, 0), lp(0, n));
    return t;
}

BoundaryConditionReport check_boundary_side_conditions(const Tiling& t) {
    if (t.region.kind != RegionKind::convex_polygon) {
        throw std::invalid_argument("boundary side conditions apply to polygon regions");
    }
    const auto& vs = t.region.vertices;
    const std::size_t n = vs.size();
    // Turn at each vertex: 1 = 120-degree inner angle, 2 = 60 degrees.
    std::vector<int> turn(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto din = segment_direction({vs[(i + n - 1) % n], vs[i]});
        const auto dout = segment_direction({vs[i], vs[(i + 1) % n]});
        turn[i] = (int(dout->first) - int(din->first) + 6) % 6;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Segment side{vs[i], vs[(i + 1) % n]};
        const auto dir = segment_direction(side);
        const int cls = line_class(dir->first);
        const Rat key = line_key(cls, side.start);
        Rat lo = line_param(cls, side.start);
        Rat hi = line_param(cls, side.end);
        if (lo > hi) std::swap(lo, hi);
        int count = 0;
        for (const auto& tile : t.tiles) {
            for (const auto& ts : triangle_sides(tile)) {
                const auto td = segment_direction(ts);
                if (line_class(td->first) != cls) continue;
                if (line_key(cls, ts.start) != key) continue;
                Rat tl = line_param(cls, ts.start);
                Rat th = line_param(cls, ts.end);
                if (tl > th) std::swap(tl, th);
                if (tl >= lo && th <= hi) ++count;
            }
        }
        const bool angle120 = (turn[i] == 1) || (turn[(i + 1) % n] == 1);
        if (angle120 && count != 1) {
            return {false, "region side " + std::to_string(i) +
                               " has a 120-degree endpoint but is covered by " +
                               std::to_string(count) + " tile sides"};
        }
        if (!angle120 && count > 2) {
            return {false, "region side " + std::to_string(i) +
                               " joins two 60-degree corners but is covered by " +
                               std::to_string(count) + " tile sides"};
        }
    }
    return {true, ""};
}

}  // namespace trilab
