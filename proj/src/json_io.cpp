#include "trilab/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trilab {

namespace {

using ordered_json = nlohmann::ordered_json;

Rat rat_from_json(const ordered_json& j, const char* what) {
    if (!j.is_string()) {
        throw std::invalid_argument(std::string(what) + " must be a rational string");
    }
    return parse_rat(j.get<std::string>());
}

LatticePoint point_from_json(const ordered_json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument(std::string(what) + " must be a pair of rational strings");
    }
    return {rat_from_json(j[0], what), rat_from_json(j[1], what)};
}

ordered_json point_to_json(const LatticePoint& p) {
    return ordered_json::array({rat_to_string(p.a), rat_to_string(p.b)});
}

}  // namespace

Tiling parse_tiling(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("tiling document must be a JSON object");
    if (!j.contains("tiles") || !j["tiles"].is_array()) {
        throw std::invalid_argument("tiling document needs a \"tiles\" array");
    }
    if (!j.contains("region") || !j["region"].is_object()) {
        throw std::invalid_argument("tiling document needs a \"region\" object");
    }

    Tiling t;
    for (const auto& jt : j["tiles"]) {
        if (!jt.is_object() || !jt.contains("o") || !jt.contains("anchor") ||
            !jt.contains("side")) {
            throw std::invalid_argument("each tile needs \"o\", \"anchor\" and \"side\"");
        }
        const std::string o = jt["o"].is_string() ? jt["o"].get<std::string>() : "";
        if (o != "up" && o != "down") {
            throw std::invalid_argument("tile orientation must be \"up\" or \"down\"");
        }
        Triangle tri;
        tri.orientation = (o == "up") ? Orientation::up : Orientation::down;
        tri.anchor = point_from_json(jt["anchor"], "tile anchor");
        tri.side = rat_from_json(jt["side"], "tile side");
        if (tri.side <= 0) throw std::invalid_argument("tile side must be positive");
        t.tiles.push_back(std::move(tri));
    }

    const auto& jr = j["region"];
    if (!jr.contains("kind") || !jr["kind"].is_string()) {
        throw std::invalid_argument("region needs a \"kind\"");
    }
    const std::string kind = jr["kind"].get<std::string>();
    if (kind == "convex_polygon") {
        if (!jr.contains("vertices") || !jr["vertices"].is_array()) {
            throw std::invalid_argument("convex_polygon region needs \"vertices\"");
        }
        std::vector<LatticePoint> vs;
        for (const auto& jv : jr["vertices"]) vs.push_back(point_from_json(jv, "region vertex"));
        t.region = Region::polygon(std::move(vs));  // validates angles and convexity
    } else if (kind == "plane_window") {
        if (!jr.contains("window") || !jr["window"].is_array() || jr["window"].size() != 4) {
            throw std::invalid_argument("plane_window region needs a 4-entry \"window\"");
        }
        const auto& w = jr["window"];
        t.region = Region::window(rat_from_json(w[0], "window bound"),
                                  rat_from_json(w[1], "window bound"),
                                  rat_from_json(w[2], "window bound"),
                                  rat_from_json(w[3], "window bound"));
    } else {
        throw std::invalid_argument("unknown region kind: " + kind);
    }

    if (j.contains("periods")) {
        const auto& jp = j["periods"];
        if (!jp.is_array() || jp.size() != 2) {
            throw std::invalid_argument("\"periods\" must be a pair of lattice vectors");
        }
        t.periods = std::make_pair(point_from_json(jp[0], "period"),
                                   point_from_json(jp[1], "period"));
    }
    return t;
}

std::string serialize_tiling(const Tiling& t) {
    ordered_json j;
    j["tiles"] = ordered_json::array();
    for (const auto& tri : t.tiles) {
        ordered_json jt;
        jt["o"] = (tri.orientation == Orientation::up) ? "up" : "down";
        jt["anchor"] = point_to_json(tri.anchor);
        jt["side"] = rat_to_string(tri.side);
        j["tiles"].push_back(std::move(jt));
    }
    ordered_json jr;
    if (t.region.kind == RegionKind::convex_polygon) {
        jr["kind"] = "convex_polygon";
        jr["vertices"] = ordered_json::array();
        for (const auto& v : t.region.vertices) jr["vertices"].push_back(point_to_json(v));
    } else {
        jr["kind"] = "plane_window";
        jr["window"] = ordered_json::array(
            {rat_to_string(t.region.a_min), rat_to_string(t.region.a_max),
             rat_to_string(t.region.b_min), rat_to_string(t.region.b_max)});
    }
    j["region"] = std::move(jr);
    if (t.periods) {
        j["periods"] =
            ordered_json::array({point_to_json(t.periods->first), point_to_json(t.periods->second)});
    }
    return j.dump(2) + "\n";
}

Tiling load_tiling_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_tiling(ss.str());
}

void save_tiling_file(const Tiling& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_tiling(t);
}

}  // namespace trilab
