// Acceptance suite: every criterion prints exactly one PASS/FAIL line and the
// process exits non-zero when any criterion fails. Tolerances and time limits
// are fixed here and not configurable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trilab/generators.hpp"
#include "trilab/json_io.hpp"
#include "trilab/skeleton.hpp"
#include "trilab/svg.hpp"
#include "trilab/tiling.hpp"
#include "trilab/tlr.hpp"
#include "trilab/walk.hpp"

using namespace trilab;

namespace {

int g_failures = 0;

void criterion(int num, const char* what, double limit_s,
               const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > limit_s) {
        ok = false;
        note = "time limit exceeded";
    }
    std::printf("%s: criterion %d — %s [%.2fs/%.0fs limit]%s%s\n", ok ? "PASS" : "FAIL", num, what,
                secs, limit_s, note.empty() ? "" : " — ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

const std::vector<Rat> kAlphas = {parse_rat("1/5"), parse_rat("1/4"), parse_rat("1/3"),
                                  parse_rat("2/5"), parse_rat("1/2")};

bool covers_all_unit_tiles(const TLRIndexing& idx, const Tiling& t) {
    std::set<int> ts;
    for (const auto& [cell, trio] : idx.cells) ts.insert(trio.t);
    for (int i = 0; i < int(t.tiles.size()); ++i) {
        if (t.tiles[std::size_t(i)].side == 1 && ts.count(i) == 0) return false;
    }
    return true;
}

bool tilings_equal(const Tiling& x, const Tiling& y) {
    if (x.tiles != y.tiles) return false;
    if (x.region.kind != y.region.kind) return false;
    if (x.region.kind == RegionKind::convex_polygon) {
        if (x.region.vertices != y.region.vertices) return false;
    } else {
        if (x.region.a_min != y.region.a_min || x.region.a_max != y.region.a_max ||
            x.region.b_min != y.region.b_min || x.region.b_max != y.region.b_max) {
            return false;
        }
    }
    return x.periods == y.periods;
}

std::vector<Tiling> generated_fixtures() {
    std::vector<Tiling> out;
    for (const Rat& a : kAlphas) {
        for (int reps = 1; reps <= 4; ++reps) out.push_back(generate_family({a}, reps));
    }
    for (int v = 1; v <= 5; ++v) out.push_back(generate_polygon_sample(v));
    for (int n : {1, 2, 3, 4, 6, 8}) out.push_back(generate_hexagonal(n));
    return out;
}

}  // namespace

int main() {
    criterion(1, "exact return probabilities agree with path counting", 5.0,
              [](std::string& note) {
                  Int pow3 = 1;
                  for (int n = 0; n <= 36; ++n) {
                      const Rat p = return_probability(n);
                      if (n % 3 != 0 && p != 0) {
                          note = "non-zero probability at n = " + std::to_string(n);
                          return false;
                      }
                      if (n <= 36 && n % 3 == 0) {
                          if (p != Rat(path_count_dp(n), pow3)) {
                              note = "mismatch with DP at n = " + std::to_string(n);
                              return false;
                          }
                      }
                      pow3 *= 3;
                  }
                  return true;
              });

    criterion(2, "closed-form values of the first return terms", 5.0, [](std::string& note) {
        if (return_probability(3) != parse_rat("2/9")) {
            note = "p_3 != 2/9";
            return false;
        }
        if (return_probability(6) != parse_rat("10/81")) {
            note = "p_6 != 10/81";
            return false;
        }
        if (green_partial_exact(2) != parse_rat("109/81")) {
            note = "partial sum through m = 2 != 109/81";
            return false;
        }
        return true;
    });

    criterion(3, "floating-point terms respect the Stirling lower bound", 10.0,
              [](std::string& note) {
                  for (int m = 1; m <= 10000; ++m) {
                      const StirlingCheck c = stirling_term_check(m);
                      if (c.term < c.lower_bound - 1e-12) {
                          note = "lower bound violated at m = " + std::to_string(m);
                          return false;
                      }
                  }
                  const StirlingCheck c = stirling_term_check(1000);
                  const double gap = std::abs(1000.0 * c.term - 0.27566444771089593);
                  if (gap > 1e-3) {
                      note = "asymptote gap " + std::to_string(gap) + " at m = 1000";
                      return false;
                  }
                  return true;
              });

    criterion(4, "Monte Carlo estimate is accurate and shard-invariant", 5.0,
              [](std::string& note) {
                  double values[3];
                  const char* shards[3] = {"1", "4", "8"};
                  for (int k = 0; k < 3; ++k) {
                      setenv("TRILAB_THREADS", shards[k], 1);
                      values[k] = estimate_return_frequency(42, 100000, 3);
                  }
                  unsetenv("TRILAB_THREADS");
                  if (values[0] != values[1] || values[0] != values[2]) {
                      note = "estimates differ across shard counts";
                      return false;
                  }
                  if (std::abs(values[0] - 2.0 / 9) > 0.0053) {
                      note = "estimate " + std::to_string(values[0]) + " too far from 2/9";
                      return false;
                  }
                  return true;
              });

    criterion(5, "family windows validate and carry the labeled structure", 10.0,
              [](std::string& note) {
                  for (const Rat& a : kAlphas) {
                      const std::string as = rat_to_string(a);
                      const Tiling fam = generate_family({a}, 4);
                      if (!validate(fam).valid) {
                          note = "invalid tiling at alpha = " + as;
                          return false;
                      }
                      std::set<Rat> want = {Rat(1), a, Rat(1 - a)};
                      std::set<Rat> got;
                      for (const auto& [d, n] : diameter_multiset(fam)) got.insert(d);
                      if (got != want) {
                          note = "unexpected diameter set at alpha = " + as;
                          return false;
                      }
                      if (!shared_side_pairs(fam).empty()) {
                          note = "shared side pair at alpha = " + as;
                          return false;
                      }
                      if (!find_e_configurations(fam, 2, true).empty()) {
                          note = "E-configuration found at alpha = " + as;
                          return false;
                      }
                      const TLRIndexing idx = extract_tlr_indexing(fam, 2);
                      if (!covers_all_unit_tiles(idx, fam)) {
                          note = "unit tile missing a T role at alpha = " + as;
                          return false;
                      }
                      if (infer_alpha(idx, fam).alpha != a) {
                          note = "inferred alpha differs at alpha = " + as;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "polygon samples validate and repeat a diameter", 1.0, [](std::string& note) {
        for (int v = 1; v <= 5; ++v) {
            const Tiling s = generate_polygon_sample(v);
            if (!validate(s).valid) {
                note = "invalid sample " + std::to_string(v);
                return false;
            }
            if (!find_e_configurations(s, 2, true).empty()) {
                note = "E-configuration in sample " + std::to_string(v);
                return false;
            }
            bool repeated = false;
            for (const auto& [d, n] : diameter_multiset(s)) repeated = repeated || n >= 2;
            if (!repeated || is_perfect(s).perfect) {
                note = "sample " + std::to_string(v) + " has no repeated diameter";
                return false;
            }
        }
        return true;
    });

    criterion(7, "descent shrinks the base until structured termination", 2.0,
              [](std::string& note) {
                  const Tiling hex = generate_hexagonal(8);
                  const auto configs = find_e_configurations(hex, 2, false);
                  const EConfiguration* start = nullptr;
                  for (const auto& e : configs) {
                      if (e.lambda() >= 3) {
                          start = &e;
                          break;
                      }
                  }
                  if (!start) {
                      note = "no starting configuration of length >= 3";
                      return false;
                  }
                  const DescentTrace tr = descend(hex, *start, 64);
                  if (tr.lengths.size() < 2) {
                      note = "descent made no progress";
                      return false;
                  }
                  for (std::size_t k = 0; k + 1 < tr.lengths.size(); ++k) {
                      if (tr.lengths[k + 1] > Rat(tr.lengths[k] - 1)) {
                          note = "step " + std::to_string(k) + " shrank by less than 1";
                          return false;
                      }
                  }
                  if (tr.terminal == DescentTrace::Terminal::max_steps) {
                      note = "descent hit the step limit instead of terminating";
                      return false;
                  }
                  return true;
              });

    criterion(8, "discrete harmonicity of coordinate and diameter fields", 1.0,
              [](std::string& note) {
                  const FieldFunction constant = [](const WalkState&) {
                      return std::optional<Rat>(Rat(7));
                  };
                  const FieldFunction coord_i = [](const WalkState& s) {
                      return std::optional<Rat>(Rat(s.i));
                  };
                  const FieldFunction coord_j = [](const WalkState& s) {
                      return std::optional<Rat>(Rat(s.j));
                  };
                  const FieldFunction i_sq = [](const WalkState& s) {
                      return std::optional<Rat>(Rat(s.i * s.i));
                  };
                  for (const auto* f : {&constant, &coord_i, &coord_j}) {
                      for (const auto& [s, r] : harmonic_residual(*f, -20, 20, -20, 20)) {
                          if (r != 0) {
                              note = "non-zero residual of a linear field";
                              return false;
                          }
                      }
                  }
                  for (const auto& [s, r] : harmonic_residual(i_sq, -20, 20, -20, 20)) {
                      if (r != parse_rat("-2/3")) {
                          note = "i^2 residual differs from -2/3";
                          return false;
                      }
                  }
                  for (const Rat& a : kAlphas) {
                      const Tiling fam = generate_family({a}, 4);
                      const TLRIndexing idx = extract_tlr_indexing(fam, 2);
                      const auto field = t_diameter_field(idx, fam);
                      const FieldFunction f = [&field](const WalkState& s) -> std::optional<Rat> {
                          const auto it = field.find({s.i, s.j});
                          if (it == field.end()) return std::nullopt;
                          return it->second;
                      };
                      int evaluated = 0;
                      for (const auto& [cell, d] : field) {
                          const auto r = residual_at(f, {cell.first, cell.second});
                          if (!r) continue;  // successor clipped by the window
                          ++evaluated;
                          if (*r != 0) {
                              note = "diameter field residual non-zero at alpha = " +
                                     rat_to_string(a);
                              return false;
                          }
                      }
                      if (evaluated == 0) {
                          note = "no interior cell had all successors at alpha = " +
                                 rat_to_string(a);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "optimized detector equals the brute-force scanner", 10.0,
              [](std::string& note) {
                  for (int n = 4; n <= 6; ++n) {
                      const Tiling hex = generate_hexagonal(n);
                      if (find_e_configurations(hex, 2, true) !=
                          brute_force_e_configurations(hex, 2)) {
                          note = "mismatch on hexagonal n = " + std::to_string(n);
                          return false;
                      }
                  }
                  for (const Rat& a : {parse_rat("1/3"), parse_rat("2/5")}) {
                      for (int reps = 4; reps <= 6; ++reps) {
                          const Tiling fam = generate_family({a}, reps);
                          if (find_e_configurations(fam, 2, true) !=
                              brute_force_e_configurations(fam, 2)) {
                              note = "mismatch on family alpha = " + rat_to_string(a) +
                                     ", reps = " + std::to_string(reps);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(10, "serialization round-trips and rendering is deterministic", 10.0,
              [](std::string& note) {
                  for (const Tiling& t : generated_fixtures()) {
                      const std::string text = serialize_tiling(t);
                      const Tiling back = parse_tiling(text);
                      if (!tilings_equal(t, back)) {
                          note = "parse(serialize(t)) differs from t";
                          return false;
                      }
                      if (serialize_tiling(back) != text) {
                          note = "serialization is not stable";
                          return false;
                      }
                      if (render_svg(t, ColorBy::size) != render_svg(t, ColorBy::size)) {
                          note = "SVG bytes differ between runs";
                          return false;
                      }
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
