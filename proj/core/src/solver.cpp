#include <algorithm>
#include <bit>

#include "basketweave/coloring.hpp"

namespace bw {
namespace {

constexpr uint8_t kAllColors = 0x0f;

// Trail-based backtracking over per-tile colour bitmasks. Unit propagation
// (a decided tile removes its colour from every full-neighbour) subsumes the
// forcing rule: a tile that sees three distinct colours is left with a
// singleton mask.
class MaskSolver {
public:
    explicit MaskSolver(const WindowGraph& g)
        : graph_(g), mask_(static_cast<size_t>(g.size()), kAllColors) {}

    // Applies the seed (tiles outside the window are ignored) and closes
    // under propagation. Returns false when no window colouring can exist.
    bool assume_seed(const Seed& s) {
        for (const auto& [tile, c] : s.tiles()) {
            if (auto idx = graph_.window.try_index_of(tile)) {
                if (!assign(*idx, c)) return false;
            }
        }
        return flush();
    }

    size_t mark() const { return trail_.size(); }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            const auto& [idx, old] = trail_.back();
            mask_[static_cast<size_t>(idx)] = old;
            trail_.pop_back();
        }
        queue_.clear();
    }

    bool assign(int idx, Color c) {
        const uint8_t bit = static_cast<uint8_t>(1u << static_cast<int>(c));
        if (!(mask_[static_cast<size_t>(idx)] & bit)) return false;
        return narrow(idx, bit);
    }

    bool flush() {
        while (!queue_.empty()) {
            const int idx = queue_.back();
            queue_.pop_back();
            const uint8_t bit = mask_[static_cast<size_t>(idx)];
            const auto& row = graph_.full[static_cast<size_t>(idx)];
            for (int k = 0; k < graph_.full_count[static_cast<size_t>(idx)]; ++k) {
                const int u = row[static_cast<size_t>(k)];
                const uint8_t m = mask_[static_cast<size_t>(u)];
                if (m & bit) {
                    if (!narrow(u, static_cast<uint8_t>(m & ~bit))) {
                        queue_.clear();
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // Exhaustive count of completions, stopping once `cap` is reached.
    // Collects up to `max_witnesses` complete assignments.
    uint64_t count(uint64_t cap, int max_witnesses,
                   std::vector<std::vector<uint8_t>>* witnesses) {
        cap_ = cap;
        capped_ = false;
        found_ = 0;
        max_witnesses_ = max_witnesses;
        witnesses_ = witnesses;
        dfs();
        return found_;
    }

    bool capped() const { return capped_; }

    // First completion reachable from the current state, if any.
    std::optional<std::vector<uint8_t>> solve_one() {
        std::vector<std::vector<uint8_t>> w;
        const size_t m = mark();
        count(1, 1, &w);
        undo(m);
        if (w.empty()) return std::nullopt;
        return std::move(w.front());
    }

    const std::vector<uint8_t>& masks() const { return mask_; }

private:
    bool narrow(int idx, uint8_t m) {
        const uint8_t old = mask_[static_cast<size_t>(idx)];
        if (old == m) return true;
        trail_.emplace_back(idx, old);
        mask_[static_cast<size_t>(idx)] = m;
        if (m == 0) return false;
        if (std::popcount(m) == 1) queue_.push_back(idx);
        return true;
    }

    int pick_branch_tile() const {
        int best = -1;
        int best_width = 5;
        for (int idx = 0; idx < graph_.size(); ++idx) {
            const int width = std::popcount(mask_[static_cast<size_t>(idx)]);
            if (width > 1 && width < best_width) {
                best = idx;
                best_width = width;
                if (width == 2) break;
            }
        }
        return best;
    }

    void dfs() {
        if (capped_) return;
        const int v = pick_branch_tile();
        if (v < 0) {
            ++found_;
            if (witnesses_ && static_cast<int>(witnesses_->size()) < max_witnesses_)
                witnesses_->push_back(mask_);
            if (found_ >= cap_) capped_ = true;
            return;
        }
        const uint8_t options = mask_[static_cast<size_t>(v)];
        for (int c = 0; c < kColorCount && !capped_; ++c) {
            if (!(options & (1u << c))) continue;
            const size_t m = mark();
            if (assign(v, static_cast<Color>(c)) && flush()) dfs();
            undo(m);
        }
    }

    const WindowGraph& graph_;
    std::vector<uint8_t> mask_;
    std::vector<std::pair<int32_t, uint8_t>> trail_;
    std::vector<int32_t> queue_;

    uint64_t cap_ = 0;
    uint64_t found_ = 0;
    bool capped_ = false;
    int max_witnesses_ = 0;
    std::vector<std::vector<uint8_t>>* witnesses_ = nullptr;
};

PartialColoring from_assignment(const Window& w, const std::vector<uint8_t>& masks) {
    PartialColoring pc;
    pc.window = w;
    pc.colors.resize(masks.size());
    for (size_t k = 0; k < masks.size(); ++k) {
        pc.colors[k] = static_cast<uint8_t>(std::countr_zero(masks[k]));
    }
    return pc;
}

}  // namespace

EnumerationResult enumerate_colorings(const Seed& s, const Window& w, uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("enumerate_colorings: cap must be >= 1");
    EnumerationResult res;
    const WindowGraph graph(w);
    MaskSolver solver(graph);
    if (!solver.assume_seed(s)) return res;
    std::vector<std::vector<uint8_t>> witnesses;
    res.count = solver.count(cap, 2, &witnesses);
    res.capped = solver.capped();
    for (const auto& m : witnesses) res.witnesses.push_back(from_assignment(w, m));
    return res;
}

CandidateMap exact_candidates(const Seed& s, const Window& w) {
    CandidateMap cm;
    cm.window = w;
    const int n = w.tile_count();
    cm.masks.assign(static_cast<size_t>(n), 0);

    const WindowGraph graph(w);
    MaskSolver solver(graph);
    if (!solver.assume_seed(s)) {
        cm.window_barren = true;
        return cm;
    }

    auto absorb = [&](const std::vector<uint8_t>& assignment) {
        for (int idx = 0; idx < n; ++idx)
            cm.masks[static_cast<size_t>(idx)] |= assignment[static_cast<size_t>(idx)];
    };

    auto first = solver.solve_one();
    if (!first) {
        cm.window_barren = true;
        return cm;
    }
    absorb(*first);

    // One solvability query per (tile, colour) pair not yet certified by a
    // previously found colouring.
    for (int idx = 0; idx < n; ++idx) {
        for (int c = 0; c < kColorCount; ++c) {
            const uint8_t bit = static_cast<uint8_t>(1u << c);
            if (cm.masks[static_cast<size_t>(idx)] & bit) continue;
            if (!(solver.masks()[static_cast<size_t>(idx)] & bit)) continue;
            const size_t m = solver.mark();
            if (solver.assign(idx, static_cast<Color>(c)) && solver.flush()) {
                if (auto sol = solver.solve_one()) absorb(*sol);
            }
            solver.undo(m);
        }
    }
    return cm;
}

PartialColoring field(const Seed& s, const Window& w) {
    const CandidateMap cm = exact_candidates(s, w);
    PartialColoring pc;
    pc.window = w;
    pc.colors.assign(cm.masks.size(), kNoColor);
    pc.contradiction = cm.window_barren;
    if (cm.window_barren) return pc;
    for (int idx = 0; idx < static_cast<int>(cm.masks.size()); ++idx) {
        if (auto c = cm.singleton_color(idx))
            pc.colors[static_cast<size_t>(idx)] = static_cast<uint8_t>(*c);
    }
    return pc;
}

}  // namespace bw
