#include "trilab/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace trilab {

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw std::invalid_argument("bad rational literal: " + s);
        return Rat(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    return make_rat(Int(num), Int(den));
}

std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) != numerator(r) && r < 0) --q;
    return q;
}

std::pair<double, double> to_cartesian(const LatticePoint& p) {
    const double x = rat_to_double(p.a + p.b / 2);
    const double y = rat_to_double(p.b) * std::sqrt(3.0) / 2.0;
    return {x, y};
}

LatticePoint direction_vector(Direction d) {
    switch (d) {
        case Direction::E: return {Rat(1), Rat(0)};
        case Direction::NE: return {Rat(0), Rat(1)};
        case Direction::NW: return {Rat(-1), Rat(1)};
        case Direction::W: return {Rat(-1), Rat(0)};
        case Direction::SW: return {Rat(0), Rat(-1)};
        case Direction::SE: return {Rat(1), Rat(-1)};
    }
    throw std::logic_error("invalid direction");
}

Direction rotate60(Direction d) { return Direction((int(d) + 1) % 6); }

Direction rotate(Direction d, int steps) {
    int k = (int(d) + steps) % 6;
    if (k < 0) k += 6;
    return Direction(k);
}

Direction opposite(Direction d) { return rotate(d, 3); }

LatticePoint rotate60(const LatticePoint& p) { return {-p.b, p.a + p.b}; }

LatticePoint rotate(const LatticePoint& p, int steps) {
    int k = steps % 6;
    if (k < 0) k += 6;
    LatticePoint q = p;
    for (int i = 0; i < k; ++i) q = rotate60(q);
    return q;
}

Rat cross(const LatticePoint& u, const LatticePoint& v) { return u.a * v.b - u.b * v.a; }

Rat norm2(const LatticePoint& p) { return p.a * p.a + p.a * p.b + p.b * p.b; }

std::optional<std::pair<Direction, Rat>> segment_direction(const Segment& s) {
    const LatticePoint d = s.end - s.start;
    if (d.a == 0 && d.b == 0) return std::nullopt;
    if (d.b == 0) return std::make_pair(d.a > 0 ? Direction::E : Direction::W, abs(d.a));
    if (d.a == 0) return std::make_pair(d.b > 0 ? Direction::NE : Direction::SW, abs(d.b));
    if (d.a + d.b == 0) return std::make_pair(d.b > 0 ? Direction::NW : Direction::SE, abs(d.b));
    return std::nullopt;
}

std::optional<Segment> segment_overlap(const Segment& s1, const Segment& s2) {
    const auto d1 = segment_direction(s1);
    const auto d2 = segment_direction(s2);
    if (!d1 || !d2) return std::nullopt;
    const int c1 = line_class(d1->first);
    const int c2 = line_class(d2->first);
    if (c1 != c2) return std::nullopt;
    if (line_key(c1, s1.start) != line_key(c2, s2.start)) return std::nullopt;
    const auto interval = [&](const Segment& s) {
        Rat t0 = line_param(c1, s.start);
        Rat t1 = line_param(c1, s.end);
        if (t0 > t1) std::swap(t0, t1);
        return std::make_pair(t0, t1);
    };
    const auto [lo1, hi1] = interval(s1);
    const auto [lo2, hi2] = interval(s2);
    const Rat lo = std::max(lo1, lo2);
    const Rat hi = std::min(hi1, hi2);
    if (lo >= hi) return std::nullopt;
    const Rat key = line_key(c1, s1.start);
    return Segment{line_point(c1, key, lo), line_point(c1, key, hi)};
}

int line_class(Direction d) { return int(d) % 3; }

Direction class_direction(int cls) {
    if (cls < 0 || cls > 2) throw std::logic_error("invalid line class");
    return Direction(cls);
}

Rat line_key(int cls, const LatticePoint& p) {
    switch (cls) {
        case 0: return p.b;
        case 1: return p.a;
        case 2: return p.a + p.b;
    }
    throw std::logic_error("invalid line class");
}

Rat line_param(int cls, const LatticePoint& p) {
    switch (cls) {
        case 0: return p.a;
        case 1: return p.b;
        case 2: return p.b;
    }
    throw std::logic_error("invalid line class");
}

LatticePoint line_point(int cls, const Rat& key, const Rat& param) {
    switch (cls) {
        case 0: return {param, key};
        case 1: return {key, param};
        case 2: return {key - param, param};
    }
    throw std::logic_error("invalid line class");
}

std::array<LatticePoint, 3> triangle_vertices(const Triangle& t) {
    const LatticePoint& o = t.anchor;
    const Rat& s = t.side;
    if (t.orientation == Orientation::up) {
        return {o, LatticePoint{o.a + s, o.b}, LatticePoint{o.a, o.b + s}};
    }
    return {o, LatticePoint{o.a + s, o.b}, LatticePoint{o.a + s, o.b - s}};
}

std::array<Segment, 3> triangle_sides(const Triangle& t) {
    const auto v = triangle_vertices(t);
    return {Segment{v[0], v[1]}, Segment{v[1], v[2]}, Segment{v[2], v[0]}};
}

Rat diameter(const Triangle& t) { return t.side; }

BoundingBox bounding_box(const Triangle& t) {
    const auto v = triangle_vertices(t);
    BoundingBox box{v[0].a, v[0].a, v[0].b, v[0].b};
    for (int i = 1; i < 3; ++i) {
        box.a_min = std::min(box.a_min, v[i].a);
        box.a_max = std::max(box.a_max, v[i].a);
        box.b_min = std::min(box.b_min, v[i].b);
        box.b_max = std::max(box.b_max, v[i].b);
    }
    return box;
}

bool triangle_contains(const Triangle& t, const LatticePoint& p, bool strict) {
    const LatticePoint& o = t.anchor;
    const Rat& s = t.side;
    if (t.orientation == Orientation::up) {
        if (strict) return p.a > o.a && p.b > o.b && p.a + p.b < o.a + o.b + s;
        return p.a >= o.a && p.b >= o.b && p.a + p.b <= o.a + o.b + s;
    }
    if (strict) return p.a < o.a + s && p.b < o.b && p.a + p.b > o.a + o.b;
    return p.a <= o.a + s && p.b <= o.b && p.a + p.b >= o.a + o.b;
}

namespace {

// Projection of a triangle onto one of the three axis functionals
// (0: b, 1: a, 2: a+b), as a closed interval.
std::pair<Rat, Rat> axis_interval(const Triangle& t, int axis) {
    const auto v = triangle_vertices(t);
    const auto value = [&](const LatticePoint& p) -> Rat {
        switch (axis) {
            case 0: return p.b;
            case 1: return p.a;
            default: return p.a + p.b;
        }
    };
    Rat lo = value(v[0]), hi = lo;
    for (int i = 1; i < 3; ++i) {
        const Rat x = value(v[i]);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return {lo, hi};
}

}  // namespace

bool interiors_overlap(const Triangle& t1, const Triangle& t2) {
    for (int axis = 0; axis < 3; ++axis) {
        const auto [lo1, hi1] = axis_interval(t1, axis);
        const auto [lo2, hi2] = axis_interval(t2, axis);
        if (std::max(lo1, lo2) >= std::min(hi1, hi2)) return false;
    }
    return true;
}

}  // namespace trilab
