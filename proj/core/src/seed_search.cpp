#include <algorithm>
#include <bit>
#include <set>

#include "basketweave/coloring.hpp"

namespace bw {
namespace {

// Worklist propagation over a dense window, reusable across millions of
// candidate seeds via epoch stamping. Matches propagate() on every input;
// the equivalence is covered by a property test.
class FastGrower {
public:
    explicit FastGrower(const Window& w)
        : graph_(w),
          color_(static_cast<size_t>(w.tile_count()), 0),
          color_epoch_(static_cast<size_t>(w.tile_count()), 0),
          queued_epoch_(static_cast<size_t>(w.tile_count()), 0) {}

    const Window& window() const { return graph_.window; }

    // Runs the forcing rule to fixpoint; returns false on contradiction.
    // filled receives the number of coloured tiles.
    bool grow(const std::vector<std::pair<TileId, Color>>& seed, int* filled) {
        ++epoch_;
        int colored = 0;
        frontier_.clear();
        for (const auto& [tile, c] : seed) {
            if (auto idx = graph_.window.try_index_of(tile)) {
                color_[static_cast<size_t>(*idx)] = static_cast<uint8_t>(c);
                color_epoch_[static_cast<size_t>(*idx)] = epoch_;
                frontier_.push_back(*idx);
                ++colored;
            }
        }
        for (const int idx : frontier_) {
            if (violates(idx)) {
                *filled = colored;
                return false;
            }
        }

        while (!frontier_.empty()) {
            candidates_.clear();
            for (const int idx : frontier_) {
                const auto& row = graph_.full[static_cast<size_t>(idx)];
                for (int k = 0; k < graph_.full_count[static_cast<size_t>(idx)]; ++k) {
                    const int u = row[static_cast<size_t>(k)];
                    if (color_epoch_[static_cast<size_t>(u)] == epoch_) continue;
                    if (queued_epoch_[static_cast<size_t>(u)] == epoch_) continue;
                    queued_epoch_[static_cast<size_t>(u)] = epoch_;
                    candidates_.push_back(u);
                }
            }
            frontier_.clear();
            forced_.clear();
            for (const int idx : candidates_) {
                uint8_t seen = 0;
                const auto& row = graph_.full[static_cast<size_t>(idx)];
                for (int k = 0; k < graph_.full_count[static_cast<size_t>(idx)]; ++k) {
                    const int u = row[static_cast<size_t>(k)];
                    if (color_epoch_[static_cast<size_t>(u)] == epoch_)
                        seen |= static_cast<uint8_t>(1u << color_[static_cast<size_t>(u)]);
                }
                const int distinct = std::popcount(seen);
                if (distinct == 4) {
                    *filled = colored;
                    return false;
                }
                if (distinct == 3)
                    forced_.emplace_back(idx, static_cast<uint8_t>(std::countr_zero(
                                                  static_cast<uint8_t>(~seen & 0x0f))));
            }
            // unmark the wave's candidates so later waves can revisit them
            for (const int idx : candidates_) queued_epoch_[static_cast<size_t>(idx)] = 0;
            for (const auto& [idx, c] : forced_) {
                color_[static_cast<size_t>(idx)] = c;
                color_epoch_[static_cast<size_t>(idx)] = epoch_;
                frontier_.push_back(idx);
                ++colored;
            }
            for (const auto& [idx, c] : forced_) {
                if (violates(idx)) {
                    *filled = colored;
                    return false;
                }
            }
        }
        *filled = colored;
        return true;
    }

private:
public:
    bool colored_now(int idx) const {
        return color_epoch_[static_cast<size_t>(idx)] == epoch_;
    }

private:
    bool violates(int idx) const {
        const uint8_t c = color_[static_cast<size_t>(idx)];
        const auto& row = graph_.full[static_cast<size_t>(idx)];
        for (int k = 0; k < graph_.full_count[static_cast<size_t>(idx)]; ++k) {
            const int u = row[static_cast<size_t>(k)];
            if (color_epoch_[static_cast<size_t>(u)] == epoch_ &&
                color_[static_cast<size_t>(u)] == c)
                return true;
        }
        return false;
    }

    WindowGraph graph_;
    std::vector<uint8_t> color_;
    std::vector<uint32_t> color_epoch_;
    std::vector<uint32_t> queued_epoch_;
    std::vector<int32_t> frontier_, candidates_;
    std::vector<std::pair<int32_t, uint8_t>> forced_;
    uint32_t epoch_ = 0;
};

Seed color_canonical(std::vector<std::pair<TileId, Color>> tiles) {
    std::sort(tiles.begin(), tiles.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::array<int, kColorCount> relabel;
    relabel.fill(-1);
    int next = 0;
    for (auto& [tile, c] : tiles) {
        int& slot = relabel[static_cast<size_t>(c)];
        if (slot < 0) slot = next++;
        c = static_cast<Color>(slot);
    }
    return Seed(std::move(tiles));
}

}  // namespace

Seed canonical_seed(const Seed& s) {
    if (s.empty()) return s;
    std::optional<Seed> best;
    for (int rot = 0; rot < 4; ++rot) {
        Seed rotated = s.transformed(LatticeSymmetry{rot, 0, 0});
        const TileId t0 = rotated.tiles().front().first;
        LatticeSymmetry shift{0, -t0.i, -t0.j};
        if (!shift.valid()) shift.b = 1 - t0.j;   // land the lead block on (0,1)
        Seed candidate = color_canonical(rotated.transformed(shift).tiles());
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return *best;
}

SearchResult search_perfect_seeds(int k, const Window& patch, const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("search_perfect_seeds: k must be >= 1");
    SearchResult res;
    const std::vector<TileId> tiles = tiles_in_window(patch);
    const int n = static_cast<int>(tiles.size());
    if (k > n) return res;

    // perfection filter: padded forcing must colour the whole inner window
    FastGrower grower(Window{patch.ci, patch.cj, budget.r_test + kPerfectionPad});
    const Window inner{patch.ci, patch.cj, budget.r_test};
    std::vector<int32_t> inner_indices;
    for (const TileId& t : tiles_in_window(inner))
        inner_indices.push_back(grower.window().index_of(t));
    const int inner_count = static_cast<int>(inner_indices.size());

    std::set<Seed> seen;
    std::vector<int> subset(static_cast<size_t>(k));
    std::vector<std::pair<TileId, Color>> assignment(static_cast<size_t>(k));
    bool stop = false;

    // Colour assignments are enumerated in first-encounter canonical form
    // (first tile R, each later tile reuses an earlier class or opens the
    // next one), which quotients out the colour permutations up front.
    auto try_candidate = [&]() {
        if (res.candidates_examined >= budget.max_candidates) {
            res.budget_exhausted = true;
            stop = true;
            return;
        }
        ++res.candidates_examined;
        int filled = 0;
        if (!grower.grow(assignment, &filled)) return;
        if (filled < inner_count) return;
        for (const int32_t idx : inner_indices)
            if (!grower.colored_now(idx)) return;
        Seed canon = canonical_seed(Seed(assignment));
        if (seen.insert(canon).second) res.found.push_back(std::move(canon));
    };

    auto color_rec = [&](auto&& self, int pos, int used) -> void {
        if (stop) return;
        if (pos == k) {
            try_candidate();
            return;
        }
        const int limit = std::min(used + 1, kColorCount);
        for (int c = 0; c < limit; ++c) {
            assignment[static_cast<size_t>(pos)].second = static_cast<Color>(c);
            self(self, pos + 1, std::max(used, c + 1));
        }
    };

    auto subset_rec = [&](auto&& self, int pos, int from) -> void {
        if (stop) return;
        if (pos == k) {
            for (int t = 0; t < k; ++t)
                assignment[static_cast<size_t>(t)].first =
                    tiles[static_cast<size_t>(subset[static_cast<size_t>(t)])];
            color_rec(color_rec, 0, 0);
            return;
        }
        for (int idx = from; idx <= n - (k - pos); ++idx) {
            subset[static_cast<size_t>(pos)] = idx;
            self(self, pos + 1, idx + 1);
        }
    };

    subset_rec(subset_rec, 0, 0);
    return res;
}

}  // namespace bw
