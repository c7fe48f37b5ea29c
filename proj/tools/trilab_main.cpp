#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "trilab/generators.hpp"
#include "trilab/json_io.hpp"
#include "trilab/skeleton.hpp"
#include "trilab/svg.hpp"
#include "trilab/tiling.hpp"
#include "trilab/tlr.hpp"
#include "trilab/walk.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace trilab;

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::E: return "E";
        case Direction::NE: return "NE";
        case Direction::NW: return "NW";
        case Direction::W: return "W";
        case Direction::SW: return "SW";
        case Direction::SE: return "SE";
    }
    return "?";
}

ordered_json json_point(const LatticePoint& p) {
    return ordered_json::array({rat_to_string(p.a), rat_to_string(p.b)});
}

ordered_json json_econfig(const EConfiguration& e) {
    ordered_json j;
    j["base"] = {{"start", json_point(e.base.start)}, {"end", json_point(e.base.end)}};
    j["whisker_direction"] = direction_name(e.whisker_direction);
    j["whisker_length"] = rat_to_string(e.whisker_length);
    j["lambda"] = rat_to_string(e.lambda());
    if (e.interior_point) {
        j["interior_point"] = json_point(*e.interior_point);
        j["mu"] = rat_to_string(*e.mu());
    }
    return j;
}

ordered_json json_failure(const ValidityFailure& f) {
    ordered_json j;
    switch (f.kind) {
        case FailureKind::overlap: j["kind"] = "overlap"; break;
        case FailureKind::gap: j["kind"] = "gap"; break;
        case FailureKind::outside: j["kind"] = "outside"; break;
        case FailureKind::period_inconsistency: j["kind"] = "period_inconsistency"; break;
    }
    if (f.tile1 >= 0) j["tile1"] = f.tile1;
    if (f.tile2 >= 0) j["tile2"] = f.tile2;
    if (f.witness) j["witness"] = json_point(*f.witness);
    if (!f.detail.empty()) j["detail"] = f.detail;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct AnalyzeOpts {
    std::string input;
    std::string margin = "2";
    bool human = false;
};

int cmd_analyze(const AnalyzeOpts& o) {
    const Tiling t = load_tiling_file(o.input);
    const ValidityReport vr = validate(t);
    ordered_json rep;
    rep["valid"] = vr.valid;
    if (!vr.valid) {
        rep["failure"] = json_failure(*vr.failure);
        emit(rep);
        if (o.human) {
            std::cerr << "invalid tiling: " << rep["failure"]["kind"].get<std::string>()
                      << (vr.failure->detail.empty() ? "" : " (" + vr.failure->detail + ")")
                      << "\n";
        }
        return 1;
    }

    rep["tile_count"] = t.tiles.size();
    ordered_json diams = ordered_json::array();
    for (const auto& [d, n] : diameter_multiset(t)) {
        diams.push_back({{"value", rat_to_string(d)}, {"count", n}});
    }
    rep["diameters"] = diams;
    rep["inf_diameter"] = rat_to_string(inf_diameter(t));
    const PerfectnessReport pr = is_perfect(t);
    rep["perfect"] = pr.perfect;
    if (!pr.perfect) rep["perfect_reason"] = pr.reason;
    rep["shared_side_pairs"] = shared_side_pairs(t).size();

    const Rat margin = parse_rat(o.margin);
    const auto configs = find_e_configurations(t, margin);
    ordered_json ej;
    ej["count"] = configs.size();
    ordered_json items = ordered_json::array();
    for (const auto& e : configs) items.push_back(json_econfig(e));
    ej["items"] = items;
    rep["e_configurations"] = ej;

    ordered_json tj;
    if (t.region.kind != RegionKind::plane_window) {
        tj["status"] = "not_applicable";
    } else {
        try {
            const TLRIndexing idx = extract_tlr_indexing(t, margin);
            tj["status"] = "ok";
            tj["cells"] = idx.cells.size();
            tj["frame_east"] = direction_name(idx.frame_east);
            tj["mirrored"] = idx.mirrored;
            try {
                const FamilyParams fp = infer_alpha(idx, t);
                tj["alpha"] = rat_to_string(fp.alpha);
            } catch (const InferAlphaError& e) {
                tj["status"] = "error";
                tj["message"] = e.what();
            }
        } catch (const TopologyMismatchError& e) {
            tj["status"] = "topology_mismatch";
            tj["message"] = e.what();
            const Segment w = e.witness.segment();
            tj["witness"] = {{"start", json_point(w.start)}, {"end", json_point(w.end)}};
        } catch (const std::exception& e) {
            tj["status"] = "error";
            tj["message"] = e.what();
        }
    }
    rep["tlr"] = tj;

    if (t.region.kind == RegionKind::convex_polygon) {
        const BoundaryConditionReport bc = check_boundary_side_conditions(t);
        ordered_json bj;
        bj["ok"] = bc.ok;
        if (!bc.ok) bj["detail"] = bc.detail;
        rep["boundary_conditions"] = bj;
    }

    emit(rep);
    if (o.human) {
        std::cerr << "valid tiling with " << t.tiles.size() << " tiles, "
                  << diameter_multiset(t).size() << " distinct diameters\n"
                  << "perfect: " << (pr.perfect ? "yes" : std::string("no (") + pr.reason + ")")
                  << "\n"
                  << "shared side pairs: " << shared_side_pairs(t).size() << "\n"
                  << "E-configurations (margin " << o.margin << "): " << configs.size() << "\n"
                  << "structure: " << tj["status"].get<std::string>() << "\n";
    }
    return 0;
}

struct DescendOpts {
    std::string input;
    std::string margin = "2";
    int max_steps = 64;
    std::string min_length = "0";
};

int cmd_descend(const DescendOpts& o) {
    const Tiling t = load_tiling_file(o.input);
    const Rat margin = parse_rat(o.margin);
    const Rat min_length = parse_rat(o.min_length);
    const auto configs = find_e_configurations(t, margin);
    const EConfiguration* start = nullptr;
    for (const auto& e : configs) {
        if (e.lambda() >= min_length) {
            start = &e;
            break;
        }
    }
    if (!start) {
        emit(ordered_json{{"error", "no E-configuration found"}});
        return 1;
    }
    const DescentTrace tr = descend(t, *start, o.max_steps);
    ordered_json j;
    j["initial"] = json_econfig(tr.steps.front());
    ordered_json steps = ordered_json::array();
    for (std::size_t k = 1; k < tr.steps.size(); ++k) steps.push_back(json_econfig(tr.steps[k]));
    j["steps"] = steps;
    ordered_json lengths = ordered_json::array();
    for (const auto& l : tr.lengths) lengths.push_back(rat_to_string(l));
    j["lengths"] = lengths;
    ordered_json choices = ordered_json::array();
    for (const auto c : tr.choices) {
        choices.push_back(c == BasisChoice::end_to_apex ? "end_to_apex" : "start_to_apex");
    }
    j["choices"] = choices;
    switch (tr.terminal) {
        case DescentTrace::Terminal::max_steps: j["terminal"] = "max_steps"; break;
        case DescentTrace::Terminal::window_exhausted: j["terminal"] = "window_exhausted"; break;
        case DescentTrace::Terminal::base_exhausted: j["terminal"] = "base_exhausted"; break;
    }
    if (!tr.note.empty()) j["note"] = tr.note;
    emit(j);
    return 0;
}

struct RenderOpts {
    std::string input;
    std::string output;
    std::string color_by = "size";
    std::string margin = "2";
};

int cmd_render(const RenderOpts& o) {
    const Tiling t = load_tiling_file(o.input);
    std::map<int, char> roles;
    ColorBy mode = ColorBy::size;
    if (o.color_by == "role") {
        mode = ColorBy::role;
        try {
            const TLRIndexing idx = extract_tlr_indexing(t, parse_rat(o.margin));
            for (const auto& [cell, trio] : idx.cells) {
                roles[trio.t] = 'T';
                roles[trio.l] = 'L';
                roles[trio.r] = 'R';
            }
        } catch (const std::exception& e) {
            emit(ordered_json{{"error", std::string("role extraction failed: ") + e.what()}});
            return 1;
        }
    } else if (o.color_by != "size") {
        throw CLI::ValidationError("--color-by", "must be 'size' or 'role'");
    }
    const std::string svg = render_svg(t, mode, roles);
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    out << svg;
    emit(ordered_json{{"output", o.output}, {"bytes", svg.size()}});
    return 0;
}

void write_output(const Tiling& t, const std::string& path) {
    save_tiling_file(t, path);
    emit(ordered_json{{"output", path}, {"tiles", t.tiles.size()}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equilateral-triangle tilings of convex lattice regions"};
    app.require_subcommand(1);
    int rc = 0;

    // generate
    auto* gen = app.add_subcommand("generate", "produce a tiling in the JSON format");
    gen->require_subcommand(1);

    std::string fam_alpha = "1/3", fam_out;
    int fam_reps = 1;
    auto* gen_fam = gen->add_subcommand("family",
                                        "doubly periodic three-triangle family window");
    gen_fam->add_option("--alpha", fam_alpha, "cell parameter in (0,1/2], e.g. 1/3");
    gen_fam->add_option("--reps", fam_reps, "cells per period direction")->required();
    gen_fam->add_option("-o,--output", fam_out, "output file")->required();
    gen_fam->callback([&] {
        write_output(generate_family(FamilyParams{parse_rat(fam_alpha)}, fam_reps), fam_out);
    });

    int sample_variant = 1;
    std::string sample_out;
    auto* gen_sample = gen->add_subcommand("sample", "small convex polygon samples");
    gen_sample->add_option("--variant", sample_variant, "sample number 1..5")->required();
    gen_sample->add_option("-o,--output", sample_out, "output file")->required();
    gen_sample->callback(
        [&] { write_output(generate_polygon_sample(sample_variant), sample_out); });

    int hex_n = 1;
    std::string hex_out;
    auto* gen_hex = gen->add_subcommand("hexagonal", "unit triangular grid window");
    gen_hex->add_option("--n", hex_n, "window size in cells")->required();
    gen_hex->add_option("-o,--output", hex_out, "output file")->required();
    gen_hex->callback([&] { write_output(generate_hexagonal(hex_n), hex_out); });

    // analyze
    AnalyzeOpts an;
    auto* analyze = app.add_subcommand("analyze", "validity and structure report");
    analyze->add_option("-i,--input", an.input, "tiling file")->required();
    analyze->add_option("--margin", an.margin, "core inset for window tilings");
    analyze->add_flag("--human", an.human, "also print a human summary to stderr");
    analyze->callback([&] { rc = cmd_analyze(an); });

    // descend
    DescendOpts de;
    auto* desc = app.add_subcommand("descend", "iterate the E-configuration refinement");
    desc->add_option("-i,--input", de.input, "tiling file")->required();
    desc->add_option("--margin", de.margin, "core inset for window tilings");
    desc->add_option("--max-steps", de.max_steps, "maximum refinement steps");
    desc->add_option("--min-length", de.min_length, "minimum lambda of the starting base");
    desc->callback([&] { rc = cmd_descend(de); });

    // walk
    auto* walk = app.add_subcommand("walk", "descent walk statistics");
    walk->require_subcommand(1);

    int exact_n = 0;
    auto* wexact = walk->add_subcommand("exact", "exact return probability");
    wexact->add_option("--n", exact_n, "step count")->required();
    wexact->callback([&] {
        emit(ordered_json{{"n", exact_n},
                          {"return_probability", rat_to_string(return_probability(exact_n))}});
    });

    int green_m = 0;
    std::string green_mode = "exact";
    auto* wgreen = walk->add_subcommand("green", "partial sums of return probabilities");
    wgreen->add_option("--M", green_m, "number of terms beyond m = 0")->required();
    wgreen->add_option("--mode", green_mode, "'exact' or 'float'");
    wgreen->callback([&] {
        ordered_json j{{"M", green_m}, {"mode", green_mode}};
        if (green_mode == "exact") {
            j["value"] = rat_to_string(green_partial_exact(green_m));
        } else if (green_mode == "float") {
            j["value"] = green_partial_float(green_m);
        } else {
            throw CLI::ValidationError("--mode", "must be 'exact' or 'float'");
        }
        emit(j);
    });

    std::uint64_t sim_seed = 0;
    long long sim_trials = 0;
    int sim_n = 0;
    auto* wsim = walk->add_subcommand("simulate", "Monte Carlo return frequency");
    wsim->add_option("--seed", sim_seed, "SplitMix64 seed")->required();
    wsim->add_option("--trials", sim_trials, "number of walks")->required();
    wsim->add_option("--n", sim_n, "steps per walk")->required();
    wsim->callback([&] {
        emit(ordered_json{{"seed", sim_seed},
                          {"trials", sim_trials},
                          {"n", sim_n},
                          {"estimate", estimate_return_frequency(sim_seed, sim_trials, sim_n)}});
    });

    int stir_m = 0, stir_mmax = 0;
    std::string stir_csv;
    auto* wstir = walk->add_subcommand("stirling", "Stirling bound checkpoints");
    wstir->add_option("--m", stir_m, "single checkpoint index");
    wstir->add_option("--csv", stir_csv, "write a CSV of checkpoints to this file");
    wstir->add_option("--m-max", stir_mmax, "last row of the CSV");
    wstir->callback([&] {
        if (!stir_csv.empty()) {
            if (stir_mmax < 1) throw CLI::ValidationError("--m-max", "required with --csv");
            std::ofstream out(stir_csv, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + stir_csv);
            write_stirling_csv(out, stir_mmax);
            emit(ordered_json{{"csv", stir_csv}, {"m_max", stir_mmax}});
            return;
        }
        if (stir_m < 1) throw CLI::ValidationError("--m", "required without --csv");
        const StirlingCheck c = stirling_term_check(stir_m);
        emit(ordered_json{{"m", stir_m},
                          {"term", c.term},
                          {"lower_bound", c.lower_bound},
                          {"ratio_to_asymptote", c.ratio_to_asymptote}});
    });

    // render
    RenderOpts re;
    auto* render = app.add_subcommand("render", "write an SVG view of a tiling");
    render->add_option("-i,--input", re.input, "tiling file")->required();
    render->add_option("-o,--output", re.output, "SVG output file")->required();
    render->add_option("--color-by", re.color_by, "'size' or 'role'");
    render->add_option("--margin", re.margin, "core inset for role extraction");
    render->callback([&] { rc = cmd_render(re); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
