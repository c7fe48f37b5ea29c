#include "trilab/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trilab {

Region Region::polygon(std::vector<LatticePoint> vs) {
    Region r;
    r.kind = RegionKind::convex_polygon;
    r.vertices = std::move(vs);
    check_region(r);
    return r;
}

Region Region::window(Rat a_min, Rat a_max, Rat b_min, Rat b_max) {
    Region r;
    r.kind = RegionKind::plane_window;
    r.a_min = std::move(a_min);
    r.a_max = std::move(a_max);
    r.b_min = std::move(b_min);
    r.b_max = std::move(b_max);
    check_region(r);
    return r;
}

void check_region(const Region& r) {
    if (r.kind == RegionKind::plane_window) {
        if (r.a_min >= r.a_max || r.b_min >= r.b_max) {
            throw std::invalid_argument("plane window must have positive extent");
        }
        return;
    }
    const auto& vs = r.vertices;
    const std::size_t n = vs.size();
    if (n < 3) throw std::invalid_argument("polygon region needs at least 3 vertices");
    std::vector<Direction> dirs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Segment edge{vs[i], vs[(i + 1) % n]};
        const auto d = segment_direction(edge);
        if (!d) throw std::invalid_argument("polygon edge is not a lattice segment");
        dirs[i] = d->first;
    }
    int turn_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int turn = (int(dirs[(i + 1) % n]) - int(dirs[i]) + 6) % 6;
        if (turn != 1 && turn != 2) {
            throw std::invalid_argument(
                "polygon is not convex counterclockwise with 60/120 degree angles");
        }
        turn_sum += turn;
    }
    if (turn_sum != 6) throw std::invalid_argument("polygon winds incorrectly");
}

bool region_contains(const Region& r, const LatticePoint& p, bool strict) {
    if (r.kind == RegionKind::plane_window) {
        if (strict) {
            return p.a > r.a_min && p.a < r.a_max && p.b > r.b_min && p.b < r.b_max;
        }
        return p.a >= r.a_min && p.a <= r.a_max && p.b >= r.b_min && p.b <= r.b_max;
    }
    const auto& vs = r.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint e = vs[(i + 1) % n] - vs[i];
        const Rat c = cross(e, p - vs[i]);
        if (strict ? (c <= 0) : (c < 0)) return false;
    }
    return true;
}

Rat polygon_lat_area(const std::vector<LatticePoint>& vs) {
    Rat sum = 0;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        sum += cross(vs[i], vs[(i + 1) % n]);
    }
    return abs(sum);
}

namespace {

void check_tiles(const Tiling& t) {
    for (const auto& tile : t.tiles) {
        if (tile.side <= 0) throw std::invalid_argument("tile with non-positive side");
    }
}

// Indices sorted by bounding-box a_min; scanning neighbors while their a_min
// does not pass the current a_max keeps the pair scan near-linear.
struct OverlapScanner {
    std::vector<Triangle> tris;
    std::vector<BoundingBox> boxes;
    std::vector<int> order;

    explicit OverlapScanner(std::vector<Triangle> ts) : tris(std::move(ts)) {
        boxes.reserve(tris.size());
        for (const auto& t : tris) boxes.push_back(bounding_box(t));
        order.resize(tris.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            if (boxes[x].a_min != boxes[y].a_min) return boxes[x].a_min < boxes[y].a_min;
            return x < y;
        });
    }

    // Returns the first overlapping pair in scan order, as raw indices.
    std::optional<std::pair<int, int>> first_overlap() const {
        for (std::size_t i = 0; i < order.size(); ++i) {
            const int x = order[i];
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                const int y = order[j];
                if (boxes[y].a_min >= boxes[x].a_max) break;
                if (boxes[y].b_min >= boxes[x].b_max || boxes[x].b_min >= boxes[y].b_max) continue;
                if (interiors_overlap(tris[x], tris[y])) return std::make_pair(x, y);
            }
        }
        return std::nullopt;
    }
};

Rat total_tile_area(const std::vector<Triangle>& tiles) {
    Rat sum = 0;
    for (const auto& t : tiles) sum += t.side * t.side;
    return sum;
}

// Deterministic search for a point strictly inside `in_region` (a predicate)
// and not covered by any tile in `covered` (a predicate). Probes outward from
// tile-side sample points at shrinking offsets, then falls back to a
// refining grid over the given bounding box.
template <typename InRegion, typename Covered>
std::optional<LatticePoint> find_uncovered_point(const std::vector<Triangle>& tiles,
                                                 const Rat& min_side, const BoundingBox& box,
                                                 InRegion in_region, Covered covered) {
    const auto probe = [&](const LatticePoint& p) -> bool { return in_region(p) && !covered(p); };
    for (int k = 2; k <= 12; ++k) {
        Rat delta = min_side;
        for (int i = 0; i < k; ++i) delta /= 2;
        for (const auto& tile : tiles) {
            for (const auto& side : triangle_sides(tile)) {
                for (int num = 1; num <= 3; ++num) {
                    const LatticePoint base =
                        side.start + make_rat(num, 4) * (side.end - side.start);
                    for (int d = 0; d < 6; ++d) {
                        const LatticePoint p = base + delta * direction_vector(Direction(d));
                        if (probe(p)) return p;
                    }
                }
            }
        }
    }
    for (int n = 4; n <= 256; n *= 2) {
        const Rat da = (box.a_max - box.a_min) / n;
        const Rat db = (box.b_max - box.b_min) / n;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                const LatticePoint p{box.a_min + i * da, box.b_min + j * db};
                if (probe(p)) return p;
            }
        }
    }
    return std::nullopt;
}

ValidityReport fail(ValidityFailure f) {
    ValidityReport r;
    r.valid = false;
    r.failure = std::move(f);
    return r;
}

ValidityReport validate_polygon(const Tiling& t) {
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for (const auto& v : triangle_vertices(t.tiles[i])) {
            if (!region_contains(t.region, v)) {
                return fail({FailureKind::outside, int(i), -1, v,
                             "tile vertex lies outside the region"});
            }
        }
    }
    OverlapScanner scan(t.tiles);
    if (const auto p = scan.first_overlap()) {
        return fail({FailureKind::overlap, std::min(p->first, p->second),
                     std::max(p->first, p->second), std::nullopt,
                     "tile interiors intersect"});
    }
    const Rat tile_area = total_tile_area(t.tiles);
    const Rat region_area = polygon_lat_area(t.region.vertices);
    if (tile_area != region_area) {
        Rat min_side = t.tiles.empty() ? Rat(1) : inf_diameter(t);
        BoundingBox box{t.region.vertices[0].a, t.region.vertices[0].a,
                        t.region.vertices[0].b, t.region.vertices[0].b};
        for (const auto& v : t.region.vertices) {
            box.a_min = std::min(box.a_min, v.a);
            box.a_max = std::max(box.a_max, v.a);
            box.b_min = std::min(box.b_min, v.b);
            box.b_max = std::max(box.b_max, v.b);
        }
        const auto witness = find_uncovered_point(
            t.tiles, min_side, box,
            [&](const LatticePoint& p) { return region_contains(t.region, p, true); },
            [&](const LatticePoint& p) {
                return std::any_of(t.tiles.begin(), t.tiles.end(), [&](const Triangle& tile) {
                    return triangle_contains(tile, p, false);
                });
            });
        ValidityFailure f{FailureKind::gap, -1, -1, witness,
                          "tile area " + rat_to_string(tile_area) + " != region area " +
                              rat_to_string(region_area)};
        return fail(std::move(f));
    }
    return {true, std::nullopt};
}

ValidityReport validate_window_patch(const Tiling& t) {
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for (const auto& v : triangle_vertices(t.tiles[i])) {
            if (!region_contains(t.region, v)) {
                return fail({FailureKind::outside, int(i), -1, v,
                             "tile vertex lies outside the window"});
            }
        }
    }
    OverlapScanner scan(t.tiles);
    if (const auto p = scan.first_overlap()) {
        return fail({FailureKind::overlap, std::min(p->first, p->second),
                     std::max(p->first, p->second), std::nullopt,
                     "tile interiors intersect"});
    }
    return {true, std::nullopt};
}

ValidityReport validate_periodic(const Tiling& t) {
    const auto& [p1, p2] = *t.periods;
    if (cross(p1, p2) == 0) {
        return fail({FailureKind::period_inconsistency, -1, -1, std::nullopt,
                     "period vectors are linearly dependent"});
    }
    if (t.tiles.empty()) {
        return fail({FailureKind::period_inconsistency, -1, -1, std::nullopt,
                     "empty cell cannot cover the plane"});
    }
    const int n = int(t.tiles.size());
    std::vector<Triangle> block;
    std::vector<int> cell_index;
    std::vector<int> copy_id;
    block.reserve(9 * n);
    int copy = 0;
    for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj, ++copy) {
            const LatticePoint shift = Rat(di) * p1 + Rat(dj) * p2;
            for (int i = 0; i < n; ++i) {
                Triangle tr = t.tiles[i];
                tr.anchor = tr.anchor + shift;
                block.push_back(tr);
                cell_index.push_back(i);
                copy_id.push_back(copy);
            }
        }
    }
    OverlapScanner scan(block);
    if (const auto p = scan.first_overlap()) {
        const int c1 = copy_id[p->first], c2 = copy_id[p->second];
        const int i1 = cell_index[p->first], i2 = cell_index[p->second];
        if (c1 == c2) {
            return fail({FailureKind::overlap, std::min(i1, i2), std::max(i1, i2), std::nullopt,
                         "tile interiors intersect within the cell"});
        }
        return fail({FailureKind::period_inconsistency, std::min(i1, i2), std::max(i1, i2),
                     std::nullopt, "period translates of the cell overlap"});
    }
    const Rat tile_area = total_tile_area(t.tiles);
    const Rat cell_area = 2 * abs(cross(p1, p2));
    if (tile_area != cell_area) {
        if (tile_area > cell_area) {
            return fail({FailureKind::period_inconsistency, -1, -1, std::nullopt,
                         "cell tile area " + rat_to_string(tile_area) +
                             " exceeds period parallelogram area " + rat_to_string(cell_area)});
        }
        // Area deficit: some point of the fundamental parallelogram is not
        // covered by the 3x3 block of translates.
        BoundingBox box = bounding_box(t.tiles[0]);
        for (const auto& tile : t.tiles) {
            const auto b = bounding_box(tile);
            box.a_min = std::min(box.a_min, b.a_min);
            box.a_max = std::max(box.a_max, b.a_max);
            box.b_min = std::min(box.b_min, b.b_min);
            box.b_max = std::max(box.b_max, b.b_max);
        }
        const LatticePoint origin{box.a_min, box.b_min};
        const Rat det = cross(p1, p2);
        const auto in_cell = [&](const LatticePoint& p) {
            const LatticePoint q = p - origin;
            const Rat s = cross(q, p2) / det;
            const Rat u = cross(p1, q) / det;
            return s >= 0 && s < 1 && u >= 0 && u < 1;
        };
        const auto covered = [&](const LatticePoint& p) {
            return std::any_of(block.begin(), block.end(), [&](const Triangle& tile) {
                return triangle_contains(tile, p, false);
            });
        };
        const auto witness =
            find_uncovered_point(t.tiles, inf_diameter(t), box, in_cell, covered);
        if (witness) {
            return fail({FailureKind::gap, -1, -1, witness,
                         "cell tile area " + rat_to_string(tile_area) +
                             " is less than period parallelogram area " +
                             rat_to_string(cell_area)});
        }
        return fail({FailureKind::period_inconsistency, -1, -1, std::nullopt,
                     "cell area deficit without locatable witness"});
    }
    return {true, std::nullopt};
}

}  // namespace

ValidityReport validate(const Tiling& t) {
    check_region(t.region);
    check_tiles(t);
    if (t.periods) return validate_periodic(t);
    if (t.region.kind == RegionKind::convex_polygon) return validate_polygon(t);
    return validate_window_patch(t);
}

std::map<Rat, int> diameter_multiset(const Tiling& t) {
    std::map<Rat, int> m;
    for (const auto& tile : t.tiles) ++m[tile.side];
    return m;
}

PerfectnessReport is_perfect(const Tiling& t) {
    if (t.periods) {
        return {false, "periodic repetition: every tile recurs in each period translate"};
    }
    for (const auto& [side, count] : diameter_multiset(t)) {
        if (count > 1) {
            return {false, "repeated diameter " + rat_to_string(side) + " (" +
                               std::to_string(count) + " tiles)"};
        }
    }
    return {true, ""};
}

namespace {

Segment canonical_segment(const Segment& s) {
    if (s.end < s.start) return {s.end, s.start};
    return s;
}

}  // namespace

std::vector<std::pair<int, int>> shared_side_pairs(const Tiling& t) {
    std::map<Segment, std::vector<int>> by_side;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for (const auto& s : triangle_sides(t.tiles[i])) {
            by_side[canonical_segment(s)].push_back(int(i));
        }
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& [seg, idx] : by_side) {
        for (std::size_t x = 0; x < idx.size(); ++x) {
            for (std::size_t y = x + 1; y < idx.size(); ++y) {
                pairs.emplace(std::min(idx[x], idx[y]), std::max(idx[x], idx[y]));
            }
        }
    }
    if (t.periods) {
        const auto& [p1, p2] = *t.periods;
        for (int di = -1; di <= 1; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) continue;
                const LatticePoint shift = Rat(di) * p1 + Rat(dj) * p2;
                for (std::size_t j = 0; j < t.tiles.size(); ++j) {
                    Triangle moved = t.tiles[j];
                    moved.anchor = moved.anchor + shift;
                    for (const auto& s : triangle_sides(moved)) {
                        const auto it = by_side.find(canonical_segment(s));
                        if (it == by_side.end()) continue;
                        for (const int i : it->second) {
                            pairs.emplace(std::min(i, int(j)), std::max(i, int(j)));
                        }
                    }
                }
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

Rat inf_diameter(const Tiling& t) {
    if (t.tiles.empty()) throw std::invalid_argument("inf_diameter of an empty tiling");
    Rat m = t.tiles[0].side;
    for (const auto& tile : t.tiles) m = std::min(m, tile.side);
    return m;
}

Int packing_bound(const Rat& rho, const Rat& d) {
    if (rho <= 0 || d <= 0) throw std::invalid_argument("packing_bound needs positive arguments");
    // 4*pi/sqrt(3) = 7.255197456936871402376..., enclosed outward.
    const Rat c_lo = make_rat(Int("7255197456936871402"), Int("1000000000000000000"));
    const Rat c_hi = make_rat(Int("7255197456936871403"), Int("1000000000000000000"));
    const Rat q = ((rho + d) / d) * ((rho + d) / d);
    const Int lo = rat_floor(c_lo * q);
    const Int hi = rat_floor(c_hi * q);
    if (lo != hi) throw std::logic_error("packing_bound enclosure too coarse for these arguments");
    return lo;
}

}  // namespace trilab
