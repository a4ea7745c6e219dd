#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basketweave/lattice.hpp"

namespace bw {

// One tick of the grey-growth automaton, evaluated against the grey set
// before painting: white tiles with exactly 3 grey full-neighbours turn
// yellow, those with exactly 4 turn violet, then both are painted grey and
// the clock advances.
struct StepReport {
    std::vector<TileId> yellow;
    std::vector<TileId> violet;
    uint64_t Y() const { return yellow.size(); }
    uint64_t V() const { return violet.size(); }
    uint64_t C() const { return Y() + V(); }
};

struct SequenceSet {
    std::vector<int64_t> V, Y, C;   // index s-1 holds the value at time s
};

class GreyGrowth {
public:
    // The working region is allocated eagerly: radius = seed radius +
    // max_steps + 2 blocks, so growth can never reach the boundary.
    GreyGrowth(const std::vector<TileId>& seed, int max_steps);

    // Evaluates and paints one tick. Throws std::runtime_error if a painted
    // tile lands on the region boundary (region too small).
    StepReport step();

    int time() const { return time_; }
    uint64_t grey_count() const { return grey_tiles_.size(); }
    const std::vector<TileId>& grey_tiles() const { return grey_tiles_; }
    bool is_grey(const TileId& t) const;
    const Window& region() const { return region_; }

private:
    Window region_;
    std::vector<uint8_t> grey_;
    std::vector<TileId> grey_tiles_;
    std::vector<int32_t> frontier_;   // indices painted in the previous tick
    int time_ = 1;
};

// Runs the automaton for T ticks and returns V(1..T), Y(1..T), C(1..T).
SequenceSet run_automaton(const std::vector<TileId>& seed, int T);

struct PeriodInfo {
    int burn_in = 0;
    int period = 0;
    std::vector<int64_t> values;   // the repeating difference block
};

// Smallest p such that the difference sequence seq(s+1)-seq(s) is p-periodic
// for every s >= burn_in covered by the data; p is capped at a third of the
// available difference count. Indices are 1-based times, seq[0] = value at 1.
std::optional<PeriodInfo> detect_period(const std::vector<int64_t>& seq, int burn_in);

struct ShapeMetrics {
    std::vector<std::pair<double, double>> hull;   // ccw convex hull of centres
    double circumradius = 0.0;
    std::array<double, 8> side_lengths{};          // grouped by direction octant
    double side_ratio = 0.0;                       // even groups vs odd groups
    double octagon_estimate = 0.0;                 // mean side / circumradius
    bool octagonal = false;      // false when some direction group is degenerate
    std::string note;
};

// Convex-hull statistics of a grey set; for growth shapes approaching a
// regular octagon the estimate converges to 2*sin(pi/8) = sqrt(2-sqrt(2)).
ShapeMetrics shape_metrics(const std::vector<TileId>& grey);

inline constexpr double kRegularOctagonSideOverCircumradius = 0.7653668647301795;

}  // namespace bw
