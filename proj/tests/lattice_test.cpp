#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "basketweave/lattice.hpp"

using namespace bw;

namespace {

// Geometric oracle: adjacency decided from the closed tile rectangles alone.
// Distinct dominoes have disjoint interiors, so the intersection box is a
// segment (edge contact) or a point (corner contact).
std::set<TileId> oracle_neighbors(const TileId& t, Adjacency kind) {
    std::set<TileId> out;
    const TileRect a = tile_rect(t);
    for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
            for (int slot = 0; slot < 2; ++slot) {
                const TileId u{t.i + di, t.j + dj, slot};
                if (u == t) continue;
                const TileRect b = tile_rect(u);
                const int w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
                const int h = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
                if (w < 0 || h < 0) continue;
                const bool edge = (w > 0 || h > 0);
                if (kind == Adjacency::Full || edge) out.insert(u);
            }
        }
    }
    return out;
}

std::set<TileId> as_set(const NeighborList& nl) { return {nl.begin(), nl.end()}; }

std::mt19937 rng(20240817);

TileId random_tile() {
    std::uniform_int_distribution<int> coord(-50, 50);
    std::uniform_int_distribution<int> slot(0, 1);
    return TileId{coord(rng), coord(rng), slot(rng)};
}

}  // namespace

TEST_CASE("tile_of_square pins the coordinate convention") {
    CHECK(tile_of_square({0, 0}) == TileId{0, 0, 0});
    CHECK(tile_of_square({1, 1}) == TileId{0, 0, 1});
    CHECK(tile_of_square({3, 0}) == TileId{1, 0, 1});
    CHECK(tile_of_square({2, 0}) == TileId{1, 0, 0});
    CHECK(tile_of_square({-1, -1}) == TileId{-1, -1, 1});
}

TEST_CASE("squares_of_tile inverts tile_of_square") {
    CHECK(squares_of_tile({0, 0, 0}) == std::array<UnitSquare, 2>{{{0, 0}, {1, 0}}});
    CHECK(squares_of_tile({1, 0, 0}) == std::array<UnitSquare, 2>{{{2, 0}, {2, 1}}});
    for (const TileId& t : tiles_in_window(Window{0, 0, 2})) {
        for (const UnitSquare& s : squares_of_tile(t)) CHECK(tile_of_square(s) == t);
    }
}

TEST_CASE("degree constants: 7 full and 5 edge neighbours everywhere") {
    for (int k = 0; k < 500; ++k) {
        const TileId t = random_tile();
        CHECK(neighbors(t, Adjacency::Full).count == 7);
        CHECK(neighbors(t, Adjacency::EdgeOnly).count == 5);
    }
}

TEST_CASE("closed-form adjacency equals the rasterisation oracle") {
    for (int k = 0; k < 400; ++k) {
        const TileId t = random_tile();
        CHECK(as_set(neighbors(t, Adjacency::Full)) == oracle_neighbors(t, Adjacency::Full));
        CHECK(as_set(neighbors(t, Adjacency::EdgeOnly)) ==
              oracle_neighbors(t, Adjacency::EdgeOnly));
    }
}

TEST_CASE("adjacency is symmetric and edge-only is a strict subset") {
    for (int k = 0; k < 200; ++k) {
        const TileId t = random_tile();
        for (auto kind : {Adjacency::Full, Adjacency::EdgeOnly}) {
            for (const TileId& u : neighbors(t, kind)) {
                const auto back = as_set(neighbors(u, kind));
                CHECK(back.count(t) == 1);
            }
        }
        const auto full = as_set(neighbors(t, Adjacency::Full));
        const auto edge = as_set(neighbors(t, Adjacency::EdgeOnly));
        CHECK(std::includes(full.begin(), full.end(), edge.begin(), edge.end()));
        CHECK(full.size() - edge.size() == 2);
    }
}

TEST_CASE("window sizes and deterministic ordering") {
    CHECK(tiles_in_window(Window{0, 0, 0}).size() == 2);
    CHECK(tiles_in_window(Window{0, 0, 1}).size() == 18);
    CHECK(tiles_in_window(Window{0, 0, 3}).size() == 98);

    const Window w{2, -1, 3};
    const auto tiles = tiles_in_window(w);
    for (int idx = 0; idx < static_cast<int>(tiles.size()); ++idx) {
        CHECK(w.index_of(tiles[static_cast<size_t>(idx)]) == idx);
        CHECK(w.tile_at(idx) == tiles[static_cast<size_t>(idx)]);
    }
}

TEST_CASE("coordination sequences match the published values") {
    const std::vector<uint64_t> full_expected{1, 7, 15, 24, 32, 40, 48, 56, 64, 72, 80, 88};
    const std::vector<uint64_t> edge_expected{1, 5, 11, 16, 21, 27, 32, 37, 43, 48, 53};
    CHECK(coordination_sequence({0, 0, 0}, Adjacency::Full, 11) == full_expected);
    CHECK(coordination_sequence({0, 0, 0}, Adjacency::EdgeOnly, 10) == edge_expected);
}

TEST_CASE("coordination sequences are independent of the base tile") {
    const std::vector<TileId> bases{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {3, -2, 1}};
    const auto ref_full = coordination_sequence(bases[0], Adjacency::Full, 9);
    const auto ref_edge = coordination_sequence(bases[0], Adjacency::EdgeOnly, 9);
    for (const TileId& b : bases) {
        CHECK(coordination_sequence(b, Adjacency::Full, 9) == ref_full);
        CHECK(coordination_sequence(b, Adjacency::EdgeOnly, 9) == ref_edge);
    }
}

TEST_CASE("full coordination numbers are multiples of eight from s=4 on") {
    const auto seq = coordination_sequence({0, 0, 0}, Adjacency::Full, 40);
    for (size_t s = 4; s < seq.size(); ++s) CHECK(seq[s] == 8 * s);
}

TEST_CASE("apply_symmetry: identity and translation") {
    const TileId t{0, 0, 0};
    CHECK(apply_symmetry(t, LatticeSymmetry{0, 0, 0}) == t);
    CHECK(apply_symmetry(t, LatticeSymmetry{0, 1, 1}) == TileId{1, 1, 0});
    CHECK_THROWS(apply_symmetry(t, LatticeSymmetry{0, 1, 0}));
}

TEST_CASE("symmetries are adjacency-preserving bijections") {
    std::uniform_int_distribution<int> rot(0, 3);
    std::uniform_int_distribution<int> shift(-6, 6);
    for (int k = 0; k < 300; ++k) {
        const TileId t = random_tile();
        int a = shift(rng), b = shift(rng);
        if ((a + b) & 1) ++b;
        const LatticeSymmetry g{rot(rng), a, b};
        const TileId gt = apply_symmetry(t, g);
        for (auto kind : {Adjacency::Full, Adjacency::EdgeOnly}) {
            std::set<TileId> mapped;
            for (const TileId& u : neighbors(t, kind)) mapped.insert(apply_symmetry(u, g));
            CHECK(mapped == as_set(neighbors(gt, kind)));
        }
    }
}
