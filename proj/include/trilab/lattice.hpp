#pragma once

#include <array>
#include <optional>
#include <utility>

#include "trilab/rational.hpp"

namespace trilab {

// Points live in the triangular lattice spanned by e1 = (1, 0) and
// e2 = (1/2, sqrt(3)/2) in Cartesian coordinates; we store the exact
// rational coefficients (a, b) with respect to that basis.
struct LatticePoint {
    Rat a;
    Rat b;

    friend bool operator==(const LatticePoint& x, const LatticePoint& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const LatticePoint& x, const LatticePoint& y) { return !(x == y); }
    friend bool operator<(const LatticePoint& x, const LatticePoint& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    friend LatticePoint operator+(const LatticePoint& x, const LatticePoint& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend LatticePoint operator-(const LatticePoint& x, const LatticePoint& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend LatticePoint operator*(const Rat& s, const LatticePoint& p) {
        return {s * p.a, s * p.b};
    }
};

std::pair<double, double> to_cartesian(const LatticePoint& p);

// The six unit directions of the lattice, indexed counterclockwise from east.
enum class Direction { E = 0, NE = 1, NW = 2, W = 3, SW = 4, SE = 5 };

LatticePoint direction_vector(Direction d);
Direction rotate60(Direction d);              // one counterclockwise step
Direction rotate(Direction d, int steps);     // steps may be negative
Direction opposite(Direction d);

// Counterclockwise rotation by 60 degrees about the origin: (a,b) -> (-b, a+b).
LatticePoint rotate60(const LatticePoint& p);
LatticePoint rotate(const LatticePoint& p, int steps);

// cross(u, v) = u.a * v.b - u.b * v.a (an area form, not the Cartesian cross
// product; it differs from it by the constant factor sqrt(3)/2).
Rat cross(const LatticePoint& u, const LatticePoint& v);

// Squared Euclidean length of the vector (a, b): a^2 + a*b + b^2.
Rat norm2(const LatticePoint& p);

struct Segment {
    LatticePoint start;
    LatticePoint end;

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.start == y.start && x.end == y.end;
    }
    friend bool operator<(const Segment& x, const Segment& y) {
        if (!(x.start == y.start)) return x.start < y.start;
        return x.end < y.end;
    }
};

// If end - start is a positive multiple of a unit direction, returns that
// direction and the multiple (the segment length). Otherwise nullopt
// (degenerate or off-lattice segments).
std::optional<std::pair<Direction, Rat>> segment_direction(const Segment& s);

// Intersection of two collinear lattice segments when it has positive length.
std::optional<Segment> segment_overlap(const Segment& s1, const Segment& s2);

// Lattice lines come in three classes, identified by direction index mod 3:
// class 0 runs east (constant b), class 1 runs northeast (constant a),
// class 2 runs northwest (constant a + b). Each line of a class is identified
// by a rational key, and points on it by a rational parameter that advances
// by 1 per unit step along the class direction.
int line_class(Direction d);
Direction class_direction(int cls);  // E, NE or NW
Rat line_key(int cls, const LatticePoint& p);
Rat line_param(int cls, const LatticePoint& p);
LatticePoint line_point(int cls, const Rat& key, const Rat& param);

enum class Orientation { up, down };

// An equilateral tile. The anchor is the west endpoint of the horizontal
// side; an up triangle has vertices {anchor, anchor + (s,0), anchor + (0,s)}
// and a down triangle {anchor, anchor + (s,0), anchor + (s,-s)}.
struct Triangle {
    Orientation orientation;
    LatticePoint anchor;
    Rat side;

    friend bool operator==(const Triangle& x, const Triangle& y) {
        return x.orientation == y.orientation && x.anchor == y.anchor && x.side == y.side;
    }
};

std::array<LatticePoint, 3> triangle_vertices(const Triangle& t);
std::array<Segment, 3> triangle_sides(const Triangle& t);
Rat diameter(const Triangle& t);  // equals the side length

struct BoundingBox {
    Rat a_min, a_max, b_min, b_max;
};
BoundingBox bounding_box(const Triangle& t);

// Closed (strict = false) or open (strict = true) containment of a point in
// the triangle, decided by the three half-plane constraints.
bool triangle_contains(const Triangle& t, const LatticePoint& p, bool strict);

// Whether the open interiors intersect. Exact: projects both triangles onto
// the three edge-normal axes (coordinates b, a and a+b) and requires strict
// interval overlap on all of them.
bool interiors_overlap(const Triangle& t1, const Triangle& t2);

}  // namespace trilab
