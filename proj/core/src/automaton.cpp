#include "basketweave/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace bw {
namespace {

std::pair<double, double> tile_center(const TileId& t) {
    const TileRect r = tile_rect(t);
    return {0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1)};
}

}  // namespace

GreyGrowth::GreyGrowth(const std::vector<TileId>& seed, int max_steps) {
    if (max_steps < 0) throw std::invalid_argument("GreyGrowth: max_steps must be >= 0");
    int seed_radius = 0;
    for (const TileId& t : seed)
        seed_radius = std::max({seed_radius, std::abs(t.i), std::abs(t.j)});
    region_ = Window{0, 0, seed_radius + max_steps + 2};
    grey_.assign(static_cast<size_t>(region_.tile_count()), 0);
    std::unordered_set<TileId, TileHash> dedup(seed.begin(), seed.end());
    for (const TileId& t : dedup) {
        const int idx = region_.index_of(t);
        grey_[static_cast<size_t>(idx)] = 1;
        grey_tiles_.push_back(t);
        frontier_.push_back(idx);
    }
    std::sort(grey_tiles_.begin(), grey_tiles_.end());
    std::sort(frontier_.begin(), frontier_.end());
}

bool GreyGrowth::is_grey(const TileId& t) const {
    if (auto idx = region_.try_index_of(t)) return grey_[static_cast<size_t>(*idx)] != 0;
    return false;
}

StepReport GreyGrowth::step() {
    // candidate whites: full-neighbours of tiles painted in the previous tick
    std::vector<int32_t> candidates;
    std::unordered_set<int32_t> queued;
    for (const int32_t idx : frontier_) {
        const TileId t = region_.tile_at(idx);
        for (const TileId& u : neighbors(t, Adjacency::Full)) {
            const auto k = region_.try_index_of(u);
            if (!k) throw std::runtime_error("GreyGrowth: growth reached the region boundary");
            if (grey_[static_cast<size_t>(*k)]) continue;
            if (queued.insert(*k).second) candidates.push_back(*k);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    StepReport rep;
    std::vector<int32_t> painted;
    for (const int32_t idx : candidates) {
        const TileId t = region_.tile_at(idx);
        int grey_neighbors = 0;
        for (const TileId& u : neighbors(t, Adjacency::Full)) {
            if (auto k = region_.try_index_of(u))
                grey_neighbors += grey_[static_cast<size_t>(*k)];
        }
        if (grey_neighbors == 3) {
            rep.yellow.push_back(t);
            painted.push_back(idx);
        } else if (grey_neighbors == 4) {
            rep.violet.push_back(t);
            painted.push_back(idx);
        }
    }

    const int edge = region_.r;
    for (const int32_t idx : painted) {
        const TileId t = region_.tile_at(idx);
        if (std::abs(t.i) >= edge || std::abs(t.j) >= edge)
            throw std::runtime_error("GreyGrowth: growth reached the region boundary");
        grey_[static_cast<size_t>(idx)] = 1;
        grey_tiles_.push_back(t);
    }
    frontier_ = std::move(painted);
    ++time_;
    return rep;
}

SequenceSet run_automaton(const std::vector<TileId>& seed, int T) {
    if (T < 1) throw std::invalid_argument("run_automaton: T must be >= 1");
    GreyGrowth growth(seed, T);
    SequenceSet out;
    out.V.reserve(static_cast<size_t>(T));
    out.Y.reserve(static_cast<size_t>(T));
    out.C.reserve(static_cast<size_t>(T));
    for (int s = 1; s <= T; ++s) {
        const StepReport rep = growth.step();
        out.V.push_back(static_cast<int64_t>(rep.V()));
        out.Y.push_back(static_cast<int64_t>(rep.Y()));
        out.C.push_back(static_cast<int64_t>(rep.C()));
    }
    return out;
}

std::optional<PeriodInfo> detect_period(const std::vector<int64_t>& seq, int burn_in) {
    if (burn_in < 1 || burn_in >= static_cast<int>(seq.size()))
        throw std::invalid_argument("detect_period: burn_in out of range");
    // seq[s-1] holds the value at time s, so the difference at s is
    // seq[s] - seq[s-1]; s runs from burn_in to T-1
    std::vector<int64_t> diff;
    for (int s = burn_in; s + 1 <= static_cast<int>(seq.size()); ++s)
        diff.push_back(seq[static_cast<size_t>(s)] - seq[static_cast<size_t>(s) - 1]);

    const int len = static_cast<int>(diff.size());
    for (int p = 1; p <= len / 3; ++p) {
        bool ok = true;
        for (int k = 0; k + p < len && ok; ++k) ok = diff[static_cast<size_t>(k)] == diff[static_cast<size_t>(k + p)];
        if (ok) {
            PeriodInfo info;
            info.burn_in = burn_in;
            info.period = p;
            info.values.assign(diff.begin(), diff.begin() + p);
            return info;
        }
    }
    return std::nullopt;
}

namespace {

// Andrew monotone chain on integer-doubled centre coordinates.
std::vector<std::pair<int64_t, int64_t>> convex_hull(std::vector<std::pair<int64_t, int64_t>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<int64_t, int64_t>> hull(static_cast<size_t>(2 * n));
    int h = 0;
    for (int i = 0; i < n; ++i) {
        while (h >= 2 && cross(hull[static_cast<size_t>(h - 2)], hull[static_cast<size_t>(h - 1)], pts[static_cast<size_t>(i)]) <= 0) --h;
        hull[static_cast<size_t>(h++)] = pts[static_cast<size_t>(i)];
    }
    for (int i = n - 2, lower = h + 1; i >= 0; --i) {
        while (h >= lower && cross(hull[static_cast<size_t>(h - 2)], hull[static_cast<size_t>(h - 1)], pts[static_cast<size_t>(i)]) <= 0) --h;
        hull[static_cast<size_t>(h++)] = pts[static_cast<size_t>(i)];
    }
    hull.resize(static_cast<size_t>(h - 1));
    return hull;
}

}  // namespace

ShapeMetrics shape_metrics(const std::vector<TileId>& grey) {
    ShapeMetrics m;
    if (grey.size() < 3) {
        m.note = "degenerate: fewer than 3 tiles";
        return m;
    }
    std::vector<std::pair<int64_t, int64_t>> pts;
    pts.reserve(grey.size());
    double cx = 0.0, cy = 0.0;
    for (const TileId& t : grey) {
        const auto [x, y] = tile_center(t);
        pts.emplace_back(static_cast<int64_t>(std::llround(2.0 * x)),
                         static_cast<int64_t>(std::llround(2.0 * y)));
        cx += x;
        cy += y;
    }
    cx /= static_cast<double>(grey.size());
    cy /= static_cast<double>(grey.size());

    const auto hull = convex_hull(std::move(pts));
    if (hull.size() < 3) {
        m.note = "degenerate: collinear hull";
        return m;
    }
    for (const auto& [x, y] : hull)
        m.hull.emplace_back(0.5 * static_cast<double>(x), 0.5 * static_cast<double>(y));

    for (const auto& [x, y] : m.hull)
        m.circumradius = std::max(m.circumradius, std::hypot(x - cx, y - cy));

    // bucket hull edges into the 8 direction octants of a lattice-aligned
    // octagon; mis-bucketed edges are short by construction
    constexpr double kPi = std::numbers::pi;
    m.side_lengths.fill(0.0);
    for (size_t k = 0; k < m.hull.size(); ++k) {
        const auto& a = m.hull[k];
        const auto& b = m.hull[(k + 1) % m.hull.size()];
        const double dx = b.first - a.first;
        const double dy = b.second - a.second;
        const double len = std::hypot(dx, dy);
        if (len == 0.0) continue;
        const double angle = std::atan2(dy, dx);
        const int bucket = ((static_cast<int>(std::lround(angle / (kPi / 4))) % 8) + 8) % 8;
        m.side_lengths[static_cast<size_t>(bucket)] += len;
    }

    double total = 0.0, smallest = m.side_lengths[0], largest = 0.0;
    double even = 0.0, odd = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double s = m.side_lengths[static_cast<size_t>(k)];
        total += s;
        smallest = std::min(smallest, s);
        largest = std::max(largest, s);
        (k % 2 == 0 ? even : odd) += s;
    }
    m.octagonal = largest > 0.0 && smallest >= 0.1 * largest;
    m.side_ratio = (odd > 0.0) ? even / odd : 0.0;
    if (m.circumradius > 0.0) m.octagon_estimate = (total / 8.0) / m.circumradius;
    if (!m.octagonal) m.note = "shape is not octagonal; estimate inapplicable";
    return m;
}

}  // namespace bw
