#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// Basketweave domino lattice: the plane is split into 2x2 blocks of unit
// squares. Blocks with even i+j hold two horizontal dominoes (slot 0 bottom,
// slot 1 top); blocks with odd i+j hold two vertical dominoes (slot 0 left,
// slot 1 right).
namespace bw {

struct UnitSquare {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const UnitSquare&, const UnitSquare&) = default;
};

struct TileId {
    int i = 0;        // block column
    int j = 0;        // block row
    int slot = 0;     // 0 or 1

    friend auto operator<=>(const TileId&, const TileId&) = default;
};

inline bool block_is_horizontal(int i, int j) { return ((i + j) & 1) == 0; }
inline bool is_horizontal(const TileId& t) { return block_is_horizontal(t.i, t.j); }

// Axis-aligned rectangle of a domino in unit-square coordinates.
struct TileRect {
    int x0, y0, x1, y1;     // half-open would lose corner contacts; closed box
};

TileRect tile_rect(const TileId& t);

enum class Adjacency : uint8_t {
    Full,       // tiles sharing at least a point (corners count)
    EdgeOnly,   // tiles sharing a boundary segment of positive length
};

TileId tile_of_square(UnitSquare s);
std::array<UnitSquare, 2> squares_of_tile(const TileId& t);

inline constexpr int kFullDegree = 7;
inline constexpr int kEdgeDegree = 5;

// Fixed-capacity neighbour list; every tile has 7 full / 5 edge neighbours.
struct NeighborList {
    std::array<TileId, kFullDegree> data{};
    int count = 0;

    const TileId* begin() const { return data.data(); }
    const TileId* end() const { return data.data() + count; }
    TileId operator[](int k) const { return data[static_cast<size_t>(k)]; }
};

NeighborList neighbors(const TileId& t, Adjacency kind);

// Square window of blocks centered at (ci, cj) with radius r (in blocks).
// Holds exactly 2*(2r+1)^2 tiles.
struct Window {
    int ci = 0;
    int cj = 0;
    int r = 0;

    int blocks_per_side() const { return 2 * r + 1; }
    int tile_count() const { return 2 * blocks_per_side() * blocks_per_side(); }

    bool contains_block(int i, int j) const {
        return i >= ci - r && i <= ci + r && j >= cj - r && j <= cj + r;
    }
    bool contains(const TileId& t) const { return contains_block(t.i, t.j); }

    // Dense index in row-major block order (j outer, i inner), slot ascending.
    int index_of(const TileId& t) const {
        assert(contains(t));
        const int side = blocks_per_side();
        return ((t.j - (cj - r)) * side + (t.i - (ci - r))) * 2 + t.slot;
    }
    std::optional<int> try_index_of(const TileId& t) const {
        if (!contains(t)) return std::nullopt;
        return index_of(t);
    }
    TileId tile_at(int index) const {
        const int side = blocks_per_side();
        const int slot = index & 1;
        const int cell = index >> 1;
        return TileId{ci - r + cell % side, cj - r + cell / side, slot};
    }
};

std::vector<TileId> tiles_in_window(const Window& w);

// Precomputed in-window neighbour indices; -1 marks a neighbour outside the
// window. Hot path for propagation and enumeration.
struct WindowGraph {
    Window window;
    std::vector<std::array<int32_t, kFullDegree>> full;
    std::vector<int32_t> full_count;

    explicit WindowGraph(const Window& w);
    int size() const { return static_cast<int>(full.size()); }
};

// Number of tiles at each graph distance 0..s_max from t0.
std::vector<uint64_t> coordination_sequence(const TileId& t0, Adjacency kind, int s_max);

// Symmetry of the tiling: a rotation by rot*90 degrees about the unit-square
// origin (a pinwheel centre) followed by a block translation (a, b) with
// a + b even.
struct LatticeSymmetry {
    int rot = 0;    // 0..3
    int a = 0;      // block translation
    int b = 0;

    bool valid() const { return rot >= 0 && rot <= 3 && ((a + b) & 1) == 0; }
};

TileId apply_symmetry(const TileId& t, const LatticeSymmetry& g);

struct TileHash {
    size_t operator()(const TileId& t) const {
        uint64_t h = (static_cast<uint64_t>(static_cast<uint32_t>(t.i)) << 33) ^
                     (static_cast<uint64_t>(static_cast<uint32_t>(t.j)) << 1) ^
                     static_cast<uint64_t>(t.slot);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<size_t>(h);
    }
};

}  // namespace bw
