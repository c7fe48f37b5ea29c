#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilab/tiling.hpp"

namespace trilab {

// A maximal straight segment of the tiling skeleton (the union of all tile
// boundaries): collinear tile sides merged into inclusion-maximal intervals.
struct MaximalSegment {
    int cls = 0;    // line class: 0 east, 1 northeast, 2 northwest
    Rat key;        // which line of the class
    Rat t0, t1;     // parameter interval on the line, t0 < t1

    Direction line_direction() const { return class_direction(cls); }
    Rat length() const { return t1 - t0; }
    Segment segment() const { return {line_point(cls, key, t0), line_point(cls, key, t1)}; }

    friend bool operator==(const MaximalSegment& x, const MaximalSegment& y) {
        return x.cls == y.cls && x.key == y.key && x.t0 == y.t0 && x.t1 == y.t1;
    }
    friend bool operator<(const MaximalSegment& x, const MaximalSegment& y) {
        if (x.cls != y.cls) return x.cls < y.cls;
        if (x.key != y.key) return x.key < y.key;
        if (x.t0 != y.t0) return x.t0 < y.t0;
        return x.t1 < y.t1;
    }
};

struct Skeleton {
    // segments sorted by (class, key, start parameter)
    std::vector<MaximalSegment> segments;
    // per class: line key -> disjoint sorted parameter intervals
    std::array<std::map<Rat, std::vector<std::pair<Rat, Rat>>>, 3> lines;

    // The merged interval of the given line containing parameter t, if any.
    std::optional<std::pair<Rat, Rat>> interval_at(int cls, const Rat& key, const Rat& t) const;

    // How far the skeleton extends from point p in direction d before leaving
    // the skeleton; nullopt when p is not on a segment of d's line class or
    // the extension has zero length. "Extends" is strict: the returned length
    // is positive.
    std::optional<Rat> extension(const LatticePoint& p, Direction d) const;
};

// Merges the sides of a validated tiling (periodic tilings: the 3x3 block of
// cell translates) into maximal segments. Throws std::invalid_argument when
// validate(t) fails.
Skeleton build_skeleton(const Tiling& t);

// An E-shaped skeleton configuration: a base segment of length lambda on one
// lattice line with three whiskers of length >= epsilon leaving it on the
// same side in the same direction, two at the endpoints and one strictly
// inside (at fraction mu of the base).
struct EConfiguration {
    Segment base;                               // endpoints in increasing line parameter
    std::optional<LatticePoint> interior_point; // engaged for detected configurations
    Direction whisker_direction;
    Rat whisker_length;                         // epsilon: minimum over the whiskers

    Rat lambda() const;                 // base length
    std::optional<Rat> mu() const;      // interior fraction in (0,1), when present

    friend bool operator==(const EConfiguration& x, const EConfiguration& y) {
        return x.base == y.base && x.interior_point == y.interior_point &&
               x.whisker_direction == y.whisker_direction && x.whisker_length == y.whisker_length;
    }
};

// Finds E-configurations of the skeleton. For plane_window regions only
// maximal segments meeting the margin-inset core box are analyzed; margin
// must be at least the largest tile side and leave a non-empty core, else
// std::invalid_argument. Polygon regions are complete, so every maximal
// segment is analyzed and the margin is ignored.
//
// Canonical mode (all_witnesses = false) reports at most one witness per
// (maximal segment, whisker direction): the two outermost whisker points
// plus the first interior one. With all_witnesses = true every whisker-point
// triple is reported. Results are sorted by (line class, base start, base
// end, whisker direction index, interior point).
std::vector<EConfiguration> find_e_configurations(const Tiling& t, const Rat& margin,
                                                  bool all_witnesses = false);

// Reference implementation: scans all segment pairs directly with no line
// index, always in all-witnesses mode. Used to cross-check the detector.
std::vector<EConfiguration> brute_force_e_configurations(const Tiling& t, const Rat& margin);

// Local structure of the tiling around a maximal segment m: how many tiles
// have a full side on each flank of m (n_N counts the left flank with
// respect to the line direction), and which line classes bound m at its two
// ends (the maximal segments containing the endpoints as relatively interior
// points). Pattern one_over_two is the 1-against-2 picture with the bounding
// classes rotated 120/60 degrees from the base: the local structure of the
// doubly periodic three-triangle family.
struct SegmentNeighborhood {
    int n_north = 0;
    int n_south = 0;
    std::optional<Direction> west_bound_direction;
    std::optional<Direction> east_bound_direction;
    enum class Pattern { one_over_two, other } pattern = Pattern::other;
    // Tile indices (into the analyzed tile list; for periodic tilings
    // translated copies index the cell tile they came from) with a full side
    // on m, ordered by increasing parameter.
    std::vector<int> north_tiles;
    std::vector<int> south_tiles;
};

// Throws std::runtime_error when the neighborhood is clipped by a
// plane_window boundary (either flank not fully partitioned, or a bounding
// segment missing); polygon regions instead report what exists (counts may
// be zero at the region boundary, bounds may be unset).
SegmentNeighborhood neighborhood_topology(const Tiling& t, const MaximalSegment& m);

enum class BasisChoice { end_to_apex, start_to_apex };

enum class DescentTerminal { none, window_exhausted, base_exhausted };

// One refinement step: from an E-configuration of length lambda to one of
// length <= lambda - inf_diameter supported on the first base tile.
struct DescentStepResult {
    DescentTerminal terminal = DescentTerminal::none;
    std::optional<EConfiguration> next;       // engaged when terminal == none
    std::optional<BasisChoice> basis_choice;  // engaged when terminal == none
    int t1_index = -1;  // tile at the whisker corner of the base
    int t2_index = -1;  // tile following it along the base
    std::string note;   // reason for a terminal result
};

DescentStepResult next_e_configuration(const Tiling& t, const EConfiguration& e);

struct DescentTrace {
    enum class Terminal { max_steps, window_exhausted, base_exhausted };
    std::vector<EConfiguration> steps;     // starts with the initial configuration
    std::vector<Rat> lengths;              // lambda of each step
    std::vector<BasisChoice> choices;      // one per transition
    Terminal terminal = Terminal::max_steps;
    std::string note;
};

// Iterates next_e_configuration up to max_steps times. Window exhaustion is
// a structured terminal outcome, not an error.
DescentTrace descend(const Tiling& t, const EConfiguration& e, int max_steps);

}  // namespace trilab
