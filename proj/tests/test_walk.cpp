#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "trilab/walk.hpp"

using namespace trilab;

namespace {
constexpr double kAsymptote = 0.27566444771089593;  // sqrt(3) / (2 pi)
}

TEST_CASE("successors are the three downward-biased neighbors in fixed order") {
    const auto s = walk_successors({2, 4});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == WalkState{1, 3});
    CHECK(s[1] == WalkState{3, 3});
    CHECK(s[2] == WalkState{2, 6});
    CHECK_THROWS_AS(walk_successors({1, 0}), std::invalid_argument);
}

TEST_CASE("exact return probabilities") {
    CHECK(return_probability(0) == 1);
    CHECK(return_probability(3) == parse_rat("2/9"));
    CHECK(return_probability(6) == parse_rat("10/81"));
    for (int n = 1; n <= 36; ++n) {
        if (n % 3 != 0) CHECK(return_probability(n) == 0);
    }
    CHECK_THROWS_AS(return_probability(-1), std::invalid_argument);
}

TEST_CASE("path counting agrees with the closed form") {
    CHECK(path_count_dp(0) == 1);
    CHECK(path_count_dp(3) == 6);
    CHECK(path_count_dp(5) == 0);
    CHECK(path_count_dp(6) == 90);
    Int pow3 = 1;
    for (int n = 0; n <= 24; ++n) {
        CHECK(Rat(path_count_dp(n), pow3) == return_probability(n));
        pow3 *= 3;
    }
    CHECK_THROWS_AS(path_count_dp(-1), std::invalid_argument);
    CHECK_THROWS_AS(path_count_dp(61), std::invalid_argument);
}

TEST_CASE("partial sums of the return series") {
    CHECK(green_partial_exact(0) == 1);
    CHECK(green_partial_exact(1) == parse_rat("11/9"));
    CHECK(green_partial_exact(2) == parse_rat("109/81"));
    CHECK_THROWS_AS(green_partial_exact(-1), std::invalid_argument);
    for (int M : {0, 1, 2, 10, 100}) {
        CHECK(green_partial_float(M) ==
              doctest::Approx(rat_to_double(green_partial_exact(M))).epsilon(1e-12));
    }
    // the series diverges logarithmically, so partial sums keep growing
    CHECK(green_partial_float(2000) > green_partial_float(1000) + 0.1);
}

TEST_CASE("Stirling checkpoints approach the asymptote from below") {
    double prev_gap = 1.0;
    for (int m : {1, 2, 5, 10, 100, 1000, 10000}) {
        const StirlingCheck c = stirling_term_check(m);
        CHECK(c.term >= c.lower_bound - 1e-15);
        CHECK(c.ratio_to_asymptote > 0.0);
        CHECK(c.ratio_to_asymptote < 1.0);
        const double gap = std::abs(m * c.term - kAsymptote);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(stirling_term_check(1000).ratio_to_asymptote == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(stirling_term_check(0), std::invalid_argument);
}

TEST_CASE("stirling csv layout") {
    std::ostringstream os;
    write_stirling_csv(os, 3);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "m,term,lower_bound,partial_sum");
    int rows = 0;
    double first_term = 0.0, first_partial = 0.0;
    while (std::getline(is, line)) {
        ++rows;
        if (rows == 1) {
            std::sscanf(line.c_str(), "%*d,%lf,%*f,%lf", &first_term, &first_partial);
        }
    }
    CHECK(rows == 3);
    CHECK(first_term == doctest::Approx(2.0 / 9));
    CHECK(first_partial == doctest::Approx(11.0 / 9));
    CHECK_THROWS_AS(write_stirling_csv(os, 0), std::invalid_argument);
}

TEST_CASE("SplitMix64 reference stream") {
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFull);
    CHECK(g.next() == 0x6E789E6AA1B965F4ull);
    CHECK(g.next() == 0x06C45D188009454Full);
}

TEST_CASE("simulation produces a deterministic legal path") {
    const auto path = simulate_walk(123, 50);
    REQUIRE(path.size() == 51);
    CHECK(path[0] == WalkState{0, 0});
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const auto succ = walk_successors(path[k]);
        CHECK(std::count(succ.begin(), succ.end(), path[k + 1]) == 1);
    }
    CHECK(simulate_walk(123, 50) == path);
    CHECK(simulate_walk(124, 50) != path);
    CHECK(simulate_walk(123, 0) == std::vector<WalkState>{{0, 0}});
    CHECK_THROWS_AS(simulate_walk(123, -1), std::invalid_argument);
}

TEST_CASE("estimates are shard-invariant and near the exact value") {
    double values[3] = {0, 0, 0};
    const char* shards[3] = {"1", "4", "8"};
    for (int k = 0; k < 3; ++k) {
        setenv("TRILAB_THREADS", shards[k], 1);
        CHECK(thread_count() == unsigned(std::atoi(shards[k])));
        values[k] = estimate_return_frequency(42, 100000, 3);
    }
    unsetenv("TRILAB_THREADS");
    CHECK(values[0] == values[1]);
    CHECK(values[0] == values[2]);
    CHECK(std::abs(values[0] - 2.0 / 9) <= 0.0053);
    CHECK(estimate_return_frequency(7, 10, 0) == 1.0);
    CHECK_THROWS_AS(estimate_return_frequency(7, 0, 3), std::invalid_argument);
}

TEST_CASE("harmonic residuals of simple fields") {
    const FieldFunction constant = [](const WalkState&) { return std::optional<Rat>(Rat(5)); };
    const FieldFunction coord_i = [](const WalkState& s) { return std::optional<Rat>(Rat(s.i)); };
    const FieldFunction coord_j = [](const WalkState& s) { return std::optional<Rat>(Rat(s.j)); };
    const FieldFunction i_sq = [](const WalkState& s) {
        return std::optional<Rat>(Rat(s.i * s.i));
    };
    for (const auto* f : {&constant, &coord_i, &coord_j}) {
        const auto res = harmonic_residual(*f, -20, 20, -20, 20);
        CHECK(res.size() == 841);
        for (const auto& [s, r] : res) CHECK(r == 0);
    }
    for (const auto& [s, r] : harmonic_residual(i_sq, -20, 20, -20, 20)) {
        CHECK(r == parse_rat("-2/3"));
    }
    const auto one = residual_at(i_sq, {3, 1});
    REQUIRE(one.has_value());
    CHECK(*one == parse_rat("-2/3"));

    const FieldFunction partial = [](const WalkState& s) {
        return s.i >= 0 ? std::optional<Rat>(Rat(s.i)) : std::nullopt;
    };
    CHECK_FALSE(residual_at(partial, {0, 0}).has_value());
    bool caught = false;
    try {
        harmonic_residual(partial, -2, 2, -2, 2);
    } catch (const std::invalid_argument& e) {
        caught = true;
        CHECK(std::string(e.what()).find("field undefined") != std::string::npos);
    }
    CHECK(caught);
    CHECK_THROWS_AS(harmonic_residual(constant, 2, -2, 0, 0), std::invalid_argument);
}

TEST_CASE("reachability distances") {
    CHECK(reachable({0, 0}, {0, 0}, 5) == 0);
    for (const auto& s : walk_successors({0, 0})) CHECK(reachable({0, 0}, s, 5) == 1);
    CHECK(reachable({0, 0}, {2, 0}, 10) == 3);
    CHECK_FALSE(reachable({0, 0}, {2, 0}, 2).has_value());
    CHECK_THROWS_AS(reachable({0, 0}, {1, 0}, 6), std::invalid_argument);
    CHECK_THROWS_AS(reachable({0, 0}, {2, 0}, -1), std::invalid_argument);
}
