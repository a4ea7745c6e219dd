#include "basketweave/lattice.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace bw {

TileRect tile_rect(const TileId& t) {
    const int bx = 2 * t.i;
    const int by = 2 * t.j;
    if (is_horizontal(t)) {
        return TileRect{bx, by + t.slot, bx + 2, by + t.slot + 1};
    }
    return TileRect{bx + t.slot, by, bx + t.slot + 1, by + 2};
}

TileId tile_of_square(UnitSquare s) {
    // floor division so negative coordinates land in the right block
    const int i = (s.x >= 0) ? s.x / 2 : -((-s.x + 1) / 2);
    const int j = (s.y >= 0) ? s.y / 2 : -((-s.y + 1) / 2);
    const int dx = s.x - 2 * i;
    const int dy = s.y - 2 * j;
    if (block_is_horizontal(i, j)) {
        return TileId{i, j, dy};
    }
    return TileId{i, j, dx};
}

std::array<UnitSquare, 2> squares_of_tile(const TileId& t) {
    const int bx = 2 * t.i;
    const int by = 2 * t.j;
    if (is_horizontal(t)) {
        return {UnitSquare{bx, by + t.slot}, UnitSquare{bx + 1, by + t.slot}};
    }
    return {UnitSquare{bx + t.slot, by}, UnitSquare{bx + t.slot, by + 1}};
}

namespace {

struct Delta {
    int8_t di, dj, slot;
};

// Closed-form neighbour tables for the four parity/slot cases. The first five
// entries share an edge, the last two only a corner. Cross-validated against
// the rectangle-intersection oracle in the test suite.
constexpr Delta kEvenSlot0[kFullDegree] = {
    {0, 0, 1}, {-1, 0, 1}, {1, 0, 0}, {0, -1, 0}, {0, -1, 1}, {-1, -1, 1}, {1, -1, 1}};
constexpr Delta kEvenSlot1[kFullDegree] = {
    {0, 0, 0}, {-1, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}, {-1, 1, 0}, {1, 1, 0}};
constexpr Delta kOddSlot0[kFullDegree] = {
    {0, 0, 1}, {0, -1, 1}, {0, 1, 0}, {-1, 0, 0}, {-1, 0, 1}, {-1, -1, 1}, {-1, 1, 1}};
constexpr Delta kOddSlot1[kFullDegree] = {
    {0, 0, 0}, {0, -1, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}, {1, -1, 0}, {1, 1, 0}};

const Delta* delta_table(const TileId& t) {
    if (is_horizontal(t)) return t.slot == 0 ? kEvenSlot0 : kEvenSlot1;
    return t.slot == 0 ? kOddSlot0 : kOddSlot1;
}

}  // namespace

NeighborList neighbors(const TileId& t, Adjacency kind) {
    const Delta* table = delta_table(t);
    NeighborList out;
    out.count = (kind == Adjacency::Full) ? kFullDegree : kEdgeDegree;
    for (int k = 0; k < out.count; ++k) {
        out.data[static_cast<size_t>(k)] =
            TileId{t.i + table[k].di, t.j + table[k].dj, table[k].slot};
    }
    return out;
}

std::vector<TileId> tiles_in_window(const Window& w) {
    std::vector<TileId> out;
    out.reserve(static_cast<size_t>(w.tile_count()));
    for (int j = w.cj - w.r; j <= w.cj + w.r; ++j) {
        for (int i = w.ci - w.r; i <= w.ci + w.r; ++i) {
            out.push_back(TileId{i, j, 0});
            out.push_back(TileId{i, j, 1});
        }
    }
    return out;
}

WindowGraph::WindowGraph(const Window& w) : window(w) {
    const int n = w.tile_count();
    full.resize(static_cast<size_t>(n));
    full_count.resize(static_cast<size_t>(n), 0);
    for (int idx = 0; idx < n; ++idx) {
        const TileId t = w.tile_at(idx);
        const NeighborList nb = neighbors(t, Adjacency::Full);
        int c = 0;
        auto& row = full[static_cast<size_t>(idx)];
        row.fill(-1);
        for (const TileId& u : nb) {
            if (auto k = w.try_index_of(u)) row[static_cast<size_t>(c++)] = *k;
        }
        full_count[static_cast<size_t>(idx)] = c;
    }
}

std::vector<uint64_t> coordination_sequence(const TileId& t0, Adjacency kind, int s_max) {
    if (s_max < 0) throw std::invalid_argument("coordination_sequence: s_max must be >= 0");
    std::vector<uint64_t> counts(static_cast<size_t>(s_max) + 1, 0);
    std::unordered_map<TileId, int, TileHash> dist;
    dist.emplace(t0, 0);
    std::deque<TileId> queue{t0};
    counts[0] = 1;
    while (!queue.empty()) {
        const TileId t = queue.front();
        queue.pop_front();
        const int d = dist[t];
        if (d == s_max) continue;
        for (const TileId& u : neighbors(t, kind)) {
            if (dist.emplace(u, d + 1).second) {
                counts[static_cast<size_t>(d) + 1]++;
                queue.push_back(u);
            }
        }
    }
    return counts;
}

TileId apply_symmetry(const TileId& t, const LatticeSymmetry& g) {
    if (!g.valid()) throw std::invalid_argument("apply_symmetry: invalid symmetry");
    auto rot90 = [](UnitSquare s) {
        // ccw rotation about the origin maps square [x,x+1]x[y,y+1] to
        // [-y-1,-y]x[x,x+1]
        return UnitSquare{-s.y - 1, s.x};
    };
    const auto sq = squares_of_tile(t);
    UnitSquare a = sq[0];
    UnitSquare b = sq[1];
    for (int k = 0; k < g.rot; ++k) {
        a = rot90(a);
        b = rot90(b);
    }
    a.x += 2 * g.a;
    a.y += 2 * g.b;
    b.x += 2 * g.a;
    b.y += 2 * g.b;
    const TileId ta = tile_of_square(a);
    const TileId tb = tile_of_square(b);
    if (ta != tb) throw std::logic_error("apply_symmetry: image is not a tile");
    return ta;
}

}  // namespace bw
