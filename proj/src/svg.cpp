#include "trilab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <vector>

namespace trilab {

namespace {

constexpr double kScale = 100.0;  // pixels per lattice unit
constexpr double kPad = 10.0;     // viewBox padding in pixels

const char* kSizePalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b4", "#59a14f",
                              "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // never print "-0.0000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Tiling& t, ColorBy color_by, const std::map<int, char>& roles) {
    std::vector<std::array<std::pair<double, double>, 3>> polys;
    polys.reserve(t.tiles.size());
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const auto& tile : t.tiles) {
        std::array<std::pair<double, double>, 3> pts;
        int k = 0;
        for (const auto& v : triangle_vertices(tile)) {
            const auto [cx, cy] = to_cartesian(v);
            const double x = cx * kScale;
            const double y = -cy * kScale;
            pts[std::size_t(k++)] = {x, y};
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
        polys.push_back(pts);
    }
    if (first) x_min = x_max = y_min = y_max = 0;

    std::map<Rat, std::size_t> size_rank;
    if (color_by == ColorBy::size) {
        std::set<Rat> diameters;
        for (const auto& tile : t.tiles) diameters.insert(tile.side);
        std::size_t rank = 0;
        for (const auto& d : diameters) size_rank[d] = rank++;
    }

    const auto fill_of = [&](int index) -> std::string {
        if (color_by == ColorBy::size) {
            const std::size_t rank = size_rank.at(t.tiles[std::size_t(index)].side);
            return kSizePalette[rank % (sizeof kSizePalette / sizeof *kSizePalette)];
        }
        const auto it = roles.find(index);
        if (it == roles.end()) return "#cccccc";
        switch (it->second) {
            case 'T': return "#4e79a7";
            case 'L': return "#f28e2b";
            case 'R': return "#59a14f";
            default: return "#cccccc";
        }
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += fmt(x_min - kPad) + " " + fmt(y_min - kPad) + " " +
           fmt(x_max - x_min + 2 * kPad) + " " + fmt(y_max - y_min + 2 * kPad);
    out += "\">\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        out += "  <polygon points=\"";
        for (int k = 0; k < 3; ++k) {
            if (k) out += " ";
            out += fmt(polys[i][std::size_t(k)].first) + "," + fmt(polys[i][std::size_t(k)].second);
        }
        out += "\" fill=\"" + fill_of(int(i)) + "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace trilab
