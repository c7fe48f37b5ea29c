#pragma once

#include <string>

#include "trilab/tiling.hpp"

namespace trilab {

// The doubly periodic three-triangle family: each cell is a unit up tile T
// with two down tiles L (side alpha) and R (side 1 - alpha) hanging under
// its horizontal side, repeated with periods t_NE = (1-alpha, alpha) and
// t_N = (-alpha, 1).
struct FamilyParams {
    Rat alpha;  // in (0, 1/2]
};

// reps x reps cells, periods scaled by reps, region = bounding window of the
// materialized tiles. Throws std::invalid_argument for alpha outside (0,1/2]
// or reps < 1.
Tiling generate_family(const FamilyParams& params, int reps);

// Five small convex polygons tiled by a handful of equilateral tiles:
// 1 triangle (4 tiles), 2 parallelogram (2), 3 trapezoid (3), 4 pentagon
// with one 60-degree corner (4, one of side 2), 5 regular hexagon (6 equal).
Tiling generate_polygon_sample(int variant);

// n x n rhombic window of the unit triangular grid (2 n^2 tiles), periodic
// with periods (n, 0) and (0, n). Adjacent tiles share complete sides.
Tiling generate_hexagonal(int n);

struct BoundaryConditionReport {
    bool ok = false;
    std::string detail;  // first violation when !ok
};

// Checks the two boundary constraints a tiling of a convex polygon imposes
// on its region sides: a side with a 120-degree endpoint is covered by a
// single tile side, and a side between two 60-degree corners by at most two.
BoundaryConditionReport check_boundary_side_conditions(const Tiling& t);

}  // namespace trilab
