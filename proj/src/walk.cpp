#include "trilab/walk.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace trilab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void check_parity(const WalkState& s) {
    if (((s.i + s.j) % 2 + 2) % 2 != 0) {
        throw std::invalid_argument("walk state (" + std::to_string(s.i) + ", " +
                                    std::to_string(s.j) + ") has odd i + j");
    }
}

// Unbiased choice in {0, 1, 2}: 2^64 - 1 = 3 * k, so only the top value
// needs rejection.
int draw_step(SplitMix64& rng) {
    for (;;) {
        const std::uint64_t r = rng.next();
        if (r == std::numeric_limits<std::uint64_t>::max()) continue;
        return int(r % 3);
    }
}

SplitMix64 trial_stream(std::uint64_t seed, long long trial) {
    return SplitMix64(mix64(seed + std::uint64_t(trial + 1) * kGolden));
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state += kGolden;
    return mix64(state);
}

std::vector<WalkState> walk_successors(const WalkState& s) {
    check_parity(s);
    return {{s.i - 1, s.j - 1}, {s.i + 1, s.j - 1}, {s.i, s.j + 2}};
}

Rat return_probability(int n) {
    if (n < 0) throw std::invalid_argument("negative step count");
    if (n % 3 != 0) return Rat(0);
    const int m = n / 3;
    Int numer = 1;
    for (int k = 1; k <= 3 * m; ++k) numer *= k;
    Int fact_m = 1;
    for (int k = 1; k <= m; ++k) fact_m *= k;
    Int denom = fact_m * fact_m * fact_m;
    Int pow3 = 1;
    for (int k = 0; k < 3 * m; ++k) pow3 *= 3;
    return Rat(numer, denom * pow3);
}

Int path_count_dp(int n) {
    if (n < 0 || n > 60) throw std::invalid_argument("path_count_dp supports 0 <= n <= 60");
    // i ranges over [-n, n], j over [-n, 2n].
    const int wi = 2 * n + 1, wj = 3 * n + 1;
    const auto at = [&](std::vector<Int>& grid, int i, int j) -> Int& {
        return grid[std::size_t(i + n) * wj + std::size_t(j + n)];
    };
    std::vector<Int> cur(std::size_t(wi) * wj, Int(0)), next(cur);
    at(cur, 0, 0) = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), Int(0));
        for (int i = -n; i <= n; ++i) {
            for (int j = -n; j <= 2 * n; ++j) {
                const Int& c = at(cur, i, j);
                if (c == 0) continue;
                if (i - 1 >= -n && j - 1 >= -n) at(next, i - 1, j - 1) += c;
                if (i + 1 <= n && j - 1 >= -n) at(next, i + 1, j - 1) += c;
                if (j + 2 <= 2 * n) at(next, i, j + 2) += c;
            }
        }
        cur.swap(next);
    }
    return at(cur, 0, 0);
}

Rat green_partial_exact(int M) {
    if (M < 0) throw std::invalid_argument("negative term count");
    Rat sum = 1;
    Rat term = 1;
    for (int m = 1; m <= M; ++m) {
        term *= Rat(Int(3 * m - 2) * (3 * m - 1) * (3 * m), Int(27) * m * m * m);
        sum += term;
    }
    return sum;
}

double green_partial_float(int M) {
    if (M < 0) throw std::invalid_argument("negative term count");
    long double sum = 1.0L;
    for (int m = 1; m <= M; ++m) {
        const long double lg =
            std::lgamma(3.0L * m + 1) - 3.0L * std::lgamma(1.0L * m + 1) -
            3.0L * m * std::log(3.0L);
        sum += std::exp(lg);
    }
    return double(sum);
}

StirlingCheck stirling_term_check(int m) {
    if (m < 1) throw std::invalid_argument("stirling_term_check requires m >= 1");
    StirlingCheck out;
    const long double lg = std::lgamma(3.0L * m + 1) - 3.0L * std::lgamma(1.0L * m + 1) -
                           3.0L * m * std::log(3.0L);
    out.term = double(std::exp(lg));
    const long double pi = 3.14159265358979323846264338327950288L;
    out.lower_bound = double(std::sqrt(6.0L * pi) / std::exp(3.0L) / m);
    out.ratio_to_asymptote = double((long double)m * out.term / (std::sqrt(3.0L) / (2.0L * pi)));
    if (out.term < out.lower_bound - 1e-12) {
        throw std::logic_error("Stirling lower bound violated at m = " + std::to_string(m));
    }
    return out;
}

void write_stirling_csv(std::ostream& os, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be positive");
    os << "m,term,lower_bound,partial_sum\n";
    long double partial = 1.0L;  // the m = 0 term
    char buf[96];
    for (int m = 1; m <= m_max; ++m) {
        const StirlingCheck c = stirling_term_check(m);
        partial += (long double)c.term;
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", m, c.term, c.lower_bound,
                      double(partial));
        os << buf;
    }
}

std::vector<WalkState> simulate_walk(std::uint64_t seed, int n) {
    if (n < 0) throw std::invalid_argument("negative step count");
    SplitMix64 rng = trial_stream(seed, 0);
    std::vector<WalkState> path;
    path.reserve(std::size_t(n) + 1);
    WalkState s{0, 0};
    path.push_back(s);
    for (int k = 0; k < n; ++k) {
        s = walk_successors(s)[std::size_t(draw_step(rng))];
        path.push_back(s);
    }
    return path;
}

unsigned thread_count() {
    if (const char* env = std::getenv("TRILAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

double estimate_return_frequency(std::uint64_t seed, long long trials, int n) {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    if (n < 0) throw std::invalid_argument("negative step count");
    if (n == 0) return 1.0;

    const auto run_range = [&](long long lo, long long hi) -> long long {
        long long hits = 0;
        for (long long t = lo; t < hi; ++t) {
            SplitMix64 rng = trial_stream(seed, t);
            WalkState s{0, 0};
            for (int k = 0; k < n; ++k) {
                switch (draw_step(rng)) {
                    case 0: --s.i; --s.j; break;
                    case 1: ++s.i; --s.j; break;
                    default: s.j += 2; break;
                }
            }
            if (s.i == 0 && s.j == 0) ++hits;
        }
        return hits;
    };

    const long long workers = std::min<long long>(thread_count(), trials);
    if (workers <= 1) {
        return double(run_range(0, trials)) / double(trials);
    }
    std::vector<long long> hits(std::size_t(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    const long long base = trials / workers, extra = trials % workers;
    long long start = 0;
    for (long long w = 0; w < workers; ++w) {
        const long long count = base + (w < extra ? 1 : 0);
        const long long lo = start, hi = start + count;
        start = hi;
        pool.emplace_back([&, w, lo, hi] { hits[std::size_t(w)] = run_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (const long long h : hits) total += h;
    return double(total) / double(trials);
}

std::optional<Rat> residual_at(const FieldFunction& f, const WalkState& s) {
    const auto center = f(s);
    if (!center) return std::nullopt;
    Rat acc = 0;
    for (const auto& succ : walk_successors(s)) {
        const auto v = f(succ);
        if (!v) return std::nullopt;
        acc += *v;
    }
    return *center - acc / 3;
}

std::vector<std::pair<WalkState, Rat>> harmonic_residual(const FieldFunction& f, long long i0,
                                                         long long i1, long long j0,
                                                         long long j1) {
    if (i0 > i1 || j0 > j1) throw std::invalid_argument("empty state rectangle");
    std::vector<std::pair<WalkState, Rat>> out;
    for (long long i = i0; i <= i1; ++i) {
        for (long long j = j0; j <= j1; ++j) {
            if (((i + j) % 2 + 2) % 2 != 0) continue;
            const WalkState s{i, j};
            const auto r = residual_at(f, s);
            if (!r) {
                throw std::invalid_argument("field undefined at or below state (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            out.emplace_back(s, *r);
        }
    }
    return out;
}

std::optional<int> reachable(const WalkState& from, const WalkState& to, int max_steps) {
    check_parity(from);
    check_parity(to);
    if (max_steps < 0) throw std::invalid_argument("negative step limit");
    if (from == to) return 0;
    std::set<WalkState> seen{from};
    std::deque<std::pair<WalkState, int>> queue{{from, 0}};
    while (!queue.empty()) {
        const auto [s, d] = queue.front();
        queue.pop_front();
        if (d == max_steps) continue;
        for (const auto& succ : walk_successors(s)) {
            if (succ == to) return d + 1;
            if (seen.insert(succ).second) queue.emplace_back(succ, d + 1);
        }
    }
    return std::nullopt;
}

}  // namespace trilab
