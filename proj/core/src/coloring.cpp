#include "basketweave/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bw {

std::optional<Color> color_from_name(char c) {
    switch (c) {
        case 'R': return Color::R;
        case 'B': return Color::B;
        case 'Y': return Color::Y;
        case 'G': return Color::G;
        default: return std::nullopt;
    }
}

Seed::Seed(std::vector<std::pair<TileId, Color>> tiles) : tiles_(std::move(tiles)) {
    std::sort(tiles_.begin(), tiles_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t k = 1; k < tiles_.size(); ++k) {
        if (tiles_[k].first == tiles_[k - 1].first)
            throw std::invalid_argument("Seed: duplicate tile");
    }
}

std::optional<Color> Seed::color_of(const TileId& t) const {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t,
                               [](const auto& a, const TileId& b) { return a.first < b; });
    if (it != tiles_.end() && it->first == t) return it->second;
    return std::nullopt;
}

Seed Seed::without(const TileId& t) const {
    std::vector<std::pair<TileId, Color>> out;
    out.reserve(tiles_.size());
    for (const auto& [tile, c] : tiles_)
        if (tile != t) out.emplace_back(tile, c);
    return Seed(std::move(out));
}

Seed Seed::transformed(const LatticeSymmetry& g) const {
    std::vector<std::pair<TileId, Color>> out;
    out.reserve(tiles_.size());
    for (const auto& [tile, c] : tiles_) out.emplace_back(apply_symmetry(tile, g), c);
    return Seed(std::move(out));
}

Seed Seed::recolored(const std::array<Color, kColorCount>& perm) const {
    std::vector<std::pair<TileId, Color>> out;
    out.reserve(tiles_.size());
    for (const auto& [tile, c] : tiles_)
        out.emplace_back(tile, perm[static_cast<size_t>(c)]);
    return Seed(std::move(out));
}

int Seed::radius() const {
    int r = 0;
    for (const auto& [tile, c] : tiles_)
        r = std::max({r, std::abs(tile.i), std::abs(tile.j)});
    return r;
}

int PartialColoring::colored_count() const {
    int n = 0;
    for (uint8_t c : colors) n += (c != kNoColor);
    return n;
}

bool PartialColoring::complete() const {
    return colored_count() == static_cast<int>(colors.size());
}

std::vector<std::pair<TileId, Color>> PartialColoring::colored_tiles() const {
    std::vector<std::pair<TileId, Color>> out;
    for (int idx = 0; idx < static_cast<int>(colors.size()); ++idx) {
        if (colors[static_cast<size_t>(idx)] != kNoColor)
            out.emplace_back(window.tile_at(idx),
                             static_cast<Color>(colors[static_cast<size_t>(idx)]));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool CandidateMap::is_singleton(int idx) const {
    return std::popcount(masks[static_cast<size_t>(idx)]) == 1;
}

std::optional<Color> CandidateMap::singleton_color(int idx) const {
    const uint8_t m = masks[static_cast<size_t>(idx)];
    if (std::popcount(m) != 1) return std::nullopt;
    return static_cast<Color>(std::countr_zero(m));
}

std::vector<AdjacencyViolation> validate_seed(const Seed& s) {
    std::vector<AdjacencyViolation> out;
    for (const auto& [tile, c] : s.tiles()) {
        for (const TileId& u : neighbors(tile, Adjacency::Full)) {
            if (tile < u) {
                if (auto cu = s.color_of(u); cu && *cu == c)
                    out.push_back(AdjacencyViolation{tile, u, c});
            }
        }
    }
    return out;
}

PartialColoring propagate(const Seed& s, const Window& w, std::vector<int>* rounds) {
    const WindowGraph graph(w);
    const int n = graph.size();
    PartialColoring pc;
    pc.window = w;
    pc.colors.assign(static_cast<size_t>(n), kNoColor);
    if (rounds) rounds->assign(static_cast<size_t>(n), -1);

    for (const auto& [tile, c] : s.tiles()) {
        if (auto idx = w.try_index_of(tile)) {
            pc.colors[static_cast<size_t>(*idx)] = static_cast<uint8_t>(c);
            if (rounds) (*rounds)[static_cast<size_t>(*idx)] = 0;
        }
    }

    // a seed that already violates adjacency is contradictory from the start
    for (int idx = 0; idx < n && !pc.contradiction; ++idx) {
        const uint8_t c = pc.colors[static_cast<size_t>(idx)];
        if (c == kNoColor) continue;
        const auto& row = graph.full[static_cast<size_t>(idx)];
        for (int k = 0; k < graph.full_count[static_cast<size_t>(idx)]; ++k) {
            if (pc.colors[static_cast<size_t>(row[static_cast<size_t>(k)])] == c) {
                pc.contradiction = true;
                break;
            }
        }
    }

    std::vector<std::pair<int, uint8_t>> next;
    for (int round = 1; !pc.contradiction; ++round) {
        next.clear();
        for (int idx = 0; idx < n; ++idx) {
            if (pc.colors[static_cast<size_t>(idx)] != kNoColor) continue;
            uint8_t seen = 0;
            const auto& row = graph.full[static_cast<size_t>(idx)];
            for (int k = 0; k < graph.full_count[static_cast<size_t>(idx)]; ++k) {
                const uint8_t c = pc.colors[static_cast<size_t>(row[static_cast<size_t>(k)])];
                if (c != kNoColor) seen |= static_cast<uint8_t>(1u << c);
            }
            const int distinct = std::popcount(seen);
            if (distinct == 4) {
                pc.contradiction = true;
                break;
            }
            if (distinct == 3) {
                next.emplace_back(idx, static_cast<uint8_t>(
                                           std::countr_zero(static_cast<uint8_t>(~seen & 0x0f))));
            }
        }
        if (pc.contradiction || next.empty()) break;
        for (const auto& [idx, c] : next) {
            pc.colors[static_cast<size_t>(idx)] = c;
            if (rounds) (*rounds)[static_cast<size_t>(idx)] = round;
        }
        // simultaneous application can collide; an improper pair means no
        // proper window colouring extends the seed
        for (const auto& [idx, c] : next) {
            const auto& row = graph.full[static_cast<size_t>(idx)];
            for (int k = 0; k < graph.full_count[static_cast<size_t>(idx)]; ++k) {
                if (pc.colors[static_cast<size_t>(row[static_cast<size_t>(k)])] == c) {
                    pc.contradiction = true;
                    break;
                }
            }
            if (pc.contradiction) break;
        }
    }
    return pc;
}

}  // namespace bw
