#include <stdexcept>

#include "basketweave/coloring.hpp"

namespace bw {

std::string ClassificationReport::to_string() const {
    switch (verdict) {
        case Verdict::Barren:
            return "Barren(" + std::to_string(radius) + ")";
        case Verdict::PerfectWithinRadius:
            return "PerfectWithinRadius(" + std::to_string(radius) + ")";
        case Verdict::FertileEvidence:
            return dormant ? "FertileEvidence(" + std::to_string(radius) + ", dormant)"
                           : "FertileEvidence(" + std::to_string(radius) + ")";
        case Verdict::Inconclusive:
            return "Inconclusive(" + std::to_string(radius) + ")";
    }
    return "?";
}

PartialColoring padded_field_of_forcing(const Seed& s, int r, int ci, int cj) {
    const Window inner{ci, cj, r};
    const PartialColoring outer = propagate(s, Window{ci, cj, r + kPerfectionPad});
    PartialColoring pc;
    pc.window = inner;
    pc.colors.assign(static_cast<size_t>(inner.tile_count()), kNoColor);
    pc.contradiction = outer.contradiction;
    for (int idx = 0; idx < inner.tile_count(); ++idx) {
        const TileId t = inner.tile_at(idx);
        pc.colors[static_cast<size_t>(idx)] =
            outer.colors[static_cast<size_t>(outer.window.index_of(t))];
    }
    return pc;
}

bool perfect_within_radius(const Seed& s, int r, int ci, int cj) {
    const PartialColoring pc = padded_field_of_forcing(s, r, ci, cj);
    return !pc.contradiction && pc.complete();
}

ClassificationReport classify(const Seed& s, const std::vector<int>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("classify: empty schedule");
    for (size_t k = 0; k < schedule.size(); ++k) {
        if (schedule[k] < 0 || (k > 0 && schedule[k] <= schedule[k - 1]))
            throw std::invalid_argument("classify: schedule must be strictly increasing");
    }

    ClassificationReport rep;
    rep.schedule = schedule;
    const int r_max = schedule.back();
    const Window w_max{0, 0, r_max};

    // A complete contradiction-free propagation is itself a proper colouring,
    // so the perfect case needs no solvability checks.
    PartialColoring pc = padded_field_of_forcing(s, r_max);
    if (!pc.contradiction && pc.complete()) {
        rep.verdict = Verdict::PerfectWithinRadius;
        rep.radius = r_max;
        rep.forced = std::move(pc);
        return rep;
    }

    // Barren is monotone in the radius: solvable at r_max covers the rest.
    if (enumerate_colorings(s, w_max, 1).count == 0) {
        for (int r : schedule) {
            if (enumerate_colorings(s, Window{0, 0, r}, 1).count == 0) {
                rep.verdict = Verdict::Barren;
                rep.radius = r;
                rep.forced = propagate(s, Window{0, 0, r});
                return rep;
            }
        }
    }

    rep.radius = r_max;
    if (schedule.size() < 2) {
        rep.verdict = Verdict::Inconclusive;
        rep.forced = field(s, w_max);
        return rep;
    }

    PartialColoring prev = field(s, Window{0, 0, schedule[schedule.size() - 2]});
    PartialColoring last = field(s, w_max);
    const auto stable = prev.colored_tiles() == last.colored_tiles();
    if (stable) {
        rep.verdict = Verdict::FertileEvidence;
        rep.dormant = last.colored_tiles() == s.tiles();
    } else {
        rep.verdict = Verdict::Inconclusive;
    }
    rep.forced = std::move(last);
    return rep;
}

}  // namespace bw
