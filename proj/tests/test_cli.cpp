#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

const std::string kBin = TRILAB_BIN;

struct RunResult {
    int rc = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return "/tmp/trilab_cli_" + std::to_string(getpid()) + "_" + name;
}

RunResult run(const std::string& args) {
    const std::string out = tmp_path("stdout.txt"), err = tmp_path("stderr.txt");
    const std::string cmd = "\"" + kBin + "\" " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// Generates a fixture once per process and returns its path.
std::string fixture(const std::string& name, const std::string& gen_args) {
    const std::string path = tmp_path(name);
    if (!std::filesystem::exists(path)) {
        const RunResult r = run(gen_args + " -o " + path);
        REQUIRE(r.rc == 0);
    }
    return path;
}

std::string family4() { return fixture("fam4.json", "generate family --alpha 1/3 --reps 4"); }
std::string hex8() { return fixture("hex8.json", "generate hexagonal --n 8"); }

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run("--help").rc == 0);
    CHECK(run("--help").out.find("generate") != std::string::npos);
    CHECK(run("frobnicate").rc == 2);
    CHECK(run("analyze").rc == 2);                       // missing required --input
    CHECK(run("generate family --reps 2").rc == 2);      // missing required --output
    CHECK(run("").rc == 2);                              // a subcommand is required
}

TEST_CASE("generate reports the output path and tile count") {
    const RunResult fam = run("generate family --alpha 1/3 --reps 3 -o " + tmp_path("f3.json"));
    REQUIRE(fam.rc == 0);
    const json j = json::parse(fam.out);
    CHECK(j["tiles"] == 27);
    CHECK(j["output"] == tmp_path("f3.json"));
    CHECK(std::filesystem::exists(tmp_path("f3.json")));

    const RunResult sam = run("generate sample --variant 5 -o " + tmp_path("s5.json"));
    REQUIRE(sam.rc == 0);
    CHECK(json::parse(sam.out)["tiles"] == 6);

    const RunResult hex = run("generate hexagonal --n 8 -o " + tmp_path("h8.json"));
    REQUIRE(hex.rc == 0);
    CHECK(json::parse(hex.out)["tiles"] == 128);
}

TEST_CASE("generate rejects out-of-range parameters") {
    CHECK(run("generate family --alpha 2/3 --reps 2 -o " + tmp_path("bad.json")).rc == 2);
    CHECK(run("generate family --alpha 1/3 --reps 0 -o " + tmp_path("bad.json")).rc == 2);
    CHECK(run("generate sample --variant 0 -o " + tmp_path("bad.json")).rc == 2);
    const RunResult r = run("generate family --alpha 2/3 --reps 2 -o " + tmp_path("bad.json"));
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("analyze a generated family window") {
    const RunResult r = run("analyze -i " + family4());
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["tile_count"] == 48);
    CHECK(j["inf_diameter"] == "1/3");
    CHECK(j["diameters"].size() == 3);
    CHECK(j["perfect"] == false);
    CHECK(j["shared_side_pairs"] == 0);
    CHECK(j["e_configurations"]["count"] == 0);
    CHECK(j["tlr"]["status"] == "ok");
    CHECK(j["tlr"]["alpha"] == "1/3");
    CHECK(j["tlr"]["mirrored"] == false);
    CHECK(j["tlr"]["frame_east"] == "E");
    CHECK(j.count("boundary_conditions") == 0);  // window region
}

TEST_CASE("analyze --human keeps stdout machine-readable") {
    const RunResult r = run("analyze --human -i " + family4());
    REQUIRE(r.rc == 0);
    CHECK_FALSE(r.err.empty());
    CHECK(r.err.find("valid tiling") != std::string::npos);
    const json parsed = json::parse(r.out);
    CHECK(parsed.is_object());
}

TEST_CASE("analyze a polygon sample reports boundary conditions") {
    const std::string path = fixture("s2.json", "generate sample --variant 2");
    const RunResult r = run("analyze -i " + path);
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["boundary_conditions"]["ok"] == true);
    CHECK(j["tlr"]["status"] == "not_applicable");
    CHECK(j["perfect"] == false);
}

TEST_CASE("analyze flags an overlapping tiling with exit code 1") {
    const std::string path = tmp_path("overlap.json");
    {
        std::ofstream out(path);
        out << R"({"tiles": [)"
            << R"({"o": "up", "anchor": ["0", "0"], "side": "1"},)"
            << R"({"o": "up", "anchor": ["0", "0"], "side": "1"}],)"
            << R"("region": {"kind": "convex_polygon",)"
            << R"("vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}})" << "\n";
    }
    const RunResult r = run("analyze -i " + path);
    CHECK(r.rc == 1);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == false);
    CHECK(j["failure"]["kind"] == "overlap");
    CHECK(j["failure"]["tile1"] == 0);
    CHECK(j["failure"]["tile2"] == 1);
}

TEST_CASE("analyze reports the structure mismatch of a hexagonal grid") {
    const RunResult r = run("analyze -i " + hex8());
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["e_configurations"]["count"] > 0);
    CHECK(j["tlr"]["status"] == "topology_mismatch");
    CHECK(j["tlr"]["witness"]["start"].size() == 2);
    CHECK(j["tlr"]["witness"]["end"].size() == 2);
}

TEST_CASE("analyze fails cleanly on a missing file") {
    const RunResult r = run("analyze -i " + tmp_path("does_not_exist.json"));
    CHECK(r.rc == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("descend walks a hexagonal E-configuration down") {
    const RunResult r = run("descend -i " + hex8() + " --min-length 3");
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["lengths"].size() == 2);
    CHECK(j["lengths"][0] == "7/1");
    CHECK(j["lengths"][1] == "1/1");
    REQUIRE(j["choices"].size() == 1);
    CHECK(j["choices"][0] == "end_to_apex");
    CHECK(j["terminal"] == "base_exhausted");
    CHECK(j["initial"]["lambda"] == "7/1");
    CHECK(j["steps"].size() == 1);
}

TEST_CASE("descend reports when no configuration exists") {
    const RunResult r = run("descend -i " + family4());
    CHECK(r.rc == 1);
    CHECK(json::parse(r.out)["error"] == "no E-configuration found");
}

TEST_CASE("walk subcommands") {
    const RunResult ex = run("walk exact --n 6");
    REQUIRE(ex.rc == 0);
    CHECK(json::parse(ex.out)["return_probability"] == "10/81");

    const RunResult gr = run("walk green --M 2");
    REQUIRE(gr.rc == 0);
    CHECK(json::parse(gr.out)["value"] == "109/81");

    const RunResult gf = run("walk green --M 2 --mode float");
    REQUIRE(gf.rc == 0);
    CHECK(json::parse(gf.out)["value"].get<double>() ==
          doctest::Approx(109.0 / 81).epsilon(1e-12));
    CHECK(run("walk green --M 2 --mode bogus").rc == 2);

    const RunResult s1 = run("walk simulate --seed 42 --trials 1000 --n 3");
    REQUIRE(s1.rc == 0);
    const double est = json::parse(s1.out)["estimate"].get<double>();
    CHECK(est >= 0.0);
    CHECK(est <= 1.0);
    const RunResult s2 = run("walk simulate --seed 42 --trials 1000 --n 3");
    CHECK(json::parse(s2.out)["estimate"].get<double>() == est);

    const RunResult st = run("walk stirling --m 1000");
    REQUIRE(st.rc == 0);
    CHECK(json::parse(st.out)["ratio_to_asymptote"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-3));
    CHECK(run("walk stirling").rc == 2);

    const std::string csv = tmp_path("stirling.csv");
    const RunResult sc = run("walk stirling --csv " + csv + " --m-max 5");
    REQUIRE(sc.rc == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("m,term,lower_bound,partial_sum\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 6);
}

TEST_CASE("render writes SVG files") {
    const std::string svg = tmp_path("fam.svg");
    const RunResult r = run("render -i " + family4() + " -o " + svg);
    REQUIRE(r.rc == 0);
    const json j = json::parse(r.out);
    CHECK(j["output"] == svg);
    const std::string body = slurp(svg);
    CHECK(body.size() == j["bytes"].get<std::size_t>());
    CHECK(body.rfind("<svg", 0) == 0);

    const RunResult role = run("render -i " + family4() + " -o " + svg + " --color-by role");
    CHECK(role.rc == 0);

    const RunResult bad_mode = run("render -i " + family4() + " -o " + svg + " --color-by hue");
    CHECK(bad_mode.rc == 2);
}

TEST_CASE("render role mode fails on structures without the pattern") {
    const RunResult r = run("render -i " + hex8() + " -o " + tmp_path("h8.svg") +
                            " --color-by role");
    CHECK(r.rc == 1);
    const json j = json::parse(r.out);
    CHECK(j["error"].get<std::string>().rfind("role extraction failed", 0) == 0);
}

TEST_CASE("generated files round-trip through analyze") {
    for (const std::string args :
         {std::string("generate family --alpha 2/5 --reps 2"),
          std::string("generate sample --variant 4"), std::string("generate hexagonal --n 2")}) {
        const std::string path = tmp_path("rt.json");
        std::filesystem::remove(path);
        REQUIRE(run(args + " -o " + path).rc == 0);
        const RunResult r = run("analyze -i " + path + " --margin 1");
        REQUIRE(r.rc == 0);
        CHECK(json::parse(r.out)["valid"] == true);
    }
}
