#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "trilab/rational.hpp"

namespace trilab {

// State of the descent walk on the even sublattice (i + j even).
struct WalkState {
    long long i = 0;
    long long j = 0;

    bool operator==(const WalkState& o) const { return i == o.i && j == o.j; }
    bool operator<(const WalkState& o) const {
        return i != o.i ? i < o.i : j < o.j;
    }
};

// The three equally likely successors of a state, in fixed order:
// south-west, south-east, north.
std::vector<WalkState> walk_successors(const WalkState& s);

// Probability that the walk started at the origin is back at the origin
// after exactly n steps: (3m)! / (3^(3m) (m!)^3) when n = 3m, else 0.
Rat return_probability(int n);

// Number of n-step paths from the origin back to the origin, by dynamic
// programming over the reachable window (n <= 60).
Int path_count_dp(int n);

// Partial sum sum_{m=0}^{M} return_probability(3m), exact.
Rat green_partial_exact(int M);

// Same partial sum in floating point, with terms computed via lgamma.
double green_partial_float(int M);

// One Stirling-bound checkpoint for the term p_(3m), m >= 1.
struct StirlingCheck {
    double term = 0.0;                // p_(3m)
    double lower_bound = 0.0;         // sqrt(6*pi) / e^3 / m
    double ratio_to_asymptote = 0.0;  // m * term / (sqrt(3) / (2*pi))
};
StirlingCheck stirling_term_check(int m);

// Writes "m,term,lower_bound,partial_sum" rows for m = 1..m_max.
void write_stirling_csv(std::ostream& os, int m_max);

// SplitMix64 pseudo-random generator (public-domain algorithm by Sebastiano
// Vigna): state advances by the 64-bit golden ratio 0x9E3779B97F4A7C15 and
// the output is a xor-shift/multiply finalizer of the new state.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
};

// Simulates n steps from the origin with trial stream 0 of the given seed;
// returns the n + 1 visited states including the start.
std::vector<WalkState> simulate_walk(std::uint64_t seed, int n);

// Fraction of `trials` independent n-step walks that end at the origin.
// Trials are sharded over threads in contiguous chunks; the result is
// independent of the shard count because trial t always uses the stream
// seeded by finalizing seed + (t + 1) * 0x9E3779B97F4A7C15.
double estimate_return_frequency(std::uint64_t seed, long long trials, int n);

// Number of worker threads: the TRILAB_THREADS environment variable when it
// is a positive integer, otherwise std::thread::hardware_concurrency().
unsigned thread_count();

// A partially defined rational field on walk states.
using FieldFunction = std::function<std::optional<Rat>(const WalkState&)>;

// f(s) - mean of f over the successors of s; empty when any value is missing.
std::optional<Rat> residual_at(const FieldFunction& f, const WalkState& s);

// Residuals on every even-parity state in the rectangle [i0,i1] x [j0,j1];
// throws std::invalid_argument naming the first undefined state.
std::vector<std::pair<WalkState, Rat>> harmonic_residual(const FieldFunction& f,
                                                         long long i0, long long i1,
                                                         long long j0, long long j1);

// Fewest walk steps from one state to another, or empty if unreachable
// within max_steps.
std::optional<int> reachable(const WalkState& from, const WalkState& to, int max_steps);

}  // namespace trilab
