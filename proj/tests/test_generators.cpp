#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trilab/generators.hpp"
#include "trilab/tiling.hpp"

using namespace trilab;

TEST_CASE("family tiling shape") {
    const Tiling t = generate_family(FamilyParams{parse_rat("1/3")}, 3);
    CHECK(t.tiles.size() == 27);
    CHECK(t.region.kind == RegionKind::plane_window);
    REQUIRE(t.periods.has_value());
    // one cell of periods before scaling: t_NE = (1-a, a), t_N = (-a, 1)
    CHECK(t.periods->first == Rat(3) * LatticePoint{parse_rat("2/3"), parse_rat("1/3")});
    CHECK(t.periods->second == Rat(3) * LatticePoint{parse_rat("-1/3"), Rat(1)});
    // cartesian images of the single-cell periods
    const auto p1 = to_cartesian({parse_rat("2/3"), parse_rat("1/3")});
    CHECK(p1.first == doctest::Approx(5.0 / 6.0));
    CHECK(p1.second == doctest::Approx(0.2886751345948129));  // sqrt(3)/6
    const auto p2 = to_cartesian({parse_rat("-1/3"), Rat(1)});
    CHECK(p2.first == doctest::Approx(1.0 / 6.0));
    CHECK(p2.second == doctest::Approx(0.8660254037844386));  // sqrt(3)/2
}

TEST_CASE("family validity and diameters for the acceptance alphas") {
    for (const char* a : {"1/5", "1/4", "1/3", "2/5", "1/2"}) {
        const Rat alpha = parse_rat(a);
        for (int reps = 1; reps <= 3; ++reps) {
            const Tiling t = generate_family(FamilyParams{alpha}, reps);
            CHECK(t.tiles.size() == std::size_t(3 * reps * reps));
            CHECK(validate(t).valid);
            const auto ms = diameter_multiset(t);
            if (alpha == parse_rat("1/2")) {
                REQUIRE(ms.size() == 2);
                CHECK(ms.at(parse_rat("1/2")) == 2 * reps * reps);
                CHECK(ms.at(Rat(1)) == reps * reps);
            } else {
                REQUIRE(ms.size() == 3);
                CHECK(ms.at(alpha) == reps * reps);
                CHECK(ms.at(Rat(1) - alpha) == reps * reps);
                CHECK(ms.at(Rat(1)) == reps * reps);
            }
        }
    }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(generate_family(FamilyParams{parse_rat("2/3")}, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyParams{Rat(0)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyParams{parse_rat("-1/3")}, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyParams{Rat(1)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyParams{parse_rat("1/3")}, 0), std::invalid_argument);
    CHECK_NOTHROW(generate_family(FamilyParams{parse_rat("1/2")}, 1));
}

TEST_CASE("polygon samples") {
    const std::size_t expected_tiles[] = {4, 2, 3, 4, 6};
    for (int v = 1; v <= 5; ++v) {
        const Tiling t = generate_polygon_sample(v);
        CAPTURE(v);
        CHECK(t.region.kind == RegionKind::convex_polygon);
        CHECK(t.tiles.size() == expected_tiles[v - 1]);
        CHECK(validate(t).valid);
        CHECK_FALSE(is_perfect(t).perfect);  // each repeats a diameter
        const BoundaryConditionReport bc = check_boundary_side_conditions(t);
        CAPTURE(bc.detail);
        CHECK(bc.ok);
    }
    CHECK_THROWS_AS(generate_polygon_sample(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_polygon_sample(6), std::invalid_argument);
    // the pentagon sample has one tile of side 2
    const auto ms4 = diameter_multiset(generate_polygon_sample(4));
    CHECK(ms4.at(Rat(2)) == 1);
    CHECK(ms4.at(Rat(1)) == 3);
    // the hexagon sample uses six equal tiles
    const auto ms5 = diameter_multiset(generate_polygon_sample(5));
    REQUIRE(ms5.size() == 1);
    CHECK(ms5.at(Rat(1)) == 6);
}

TEST_CASE("boundary side conditions reject a side split three ways") {
    // side-3 triangle in unit tiles: the bottom region side is covered by
    // three tile sides, more than the two allowed between 60-degree corners
    Tiling t;
    t.region = Region::polygon({{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(3)}});
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i + j < 3; ++i) {
            t.tiles.push_back(Triangle{Orientation::up, {Rat(i), Rat(j)}, Rat(1)});
            if (i + j < 2) {
                t.tiles.push_back(Triangle{Orientation::down, {Rat(i), Rat(j + 1)}, Rat(1)});
            }
        }
    }
    REQUIRE(validate(t).valid);
    const BoundaryConditionReport bc = check_boundary_side_conditions(t);
    CHECK_FALSE(bc.ok);
    CHECK_FALSE(bc.detail.empty());
}

TEST_CASE("hexagonal grid") {
    for (int n = 1; n <= 5; ++n) {
        const Tiling t = generate_hexagonal(n);
        CHECK(t.tiles.size() == std::size_t(2 * n * n));
        CHECK(t.region.kind == RegionKind::plane_window);
        REQUIRE(t.periods.has_value());
        CHECK(t.periods->first == LatticePoint{Rat(n), Rat(0)});
        CHECK(t.periods->second == LatticePoint{Rat(0), Rat(n)});
        CHECK(validate(t).valid);
        const auto ms = diameter_multiset(t);
        REQUIRE(ms.size() == 1);
        CHECK(ms.at(Rat(1)) == 2 * n * n);
    }
    CHECK_THROWS_AS(generate_hexagonal(0), std::invalid_argument);
}
