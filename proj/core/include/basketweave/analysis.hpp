#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "basketweave/coloring.hpp"

namespace bw {

// Recoding of a full field into 4-domino super-tiles. A super-tile is the
// pinwheel of four dominoes whose rectangles share a corner point; the
// corner points of one parity class tile the plane. Two classes exist
// (corner x+y = 0 or 2 mod 4); the canonical anchor for a field is the class
// producing the smaller pattern census.
struct SuperTile {
    int x = 0, y = 0;              // pinwheel corner point (unit coordinates)
    int u = 0, v = 0;              // grid coordinates within the anchor class
    std::array<TileId, 4> members; // sorted by tile id
    std::array<uint8_t, 4> pattern;
};

struct SuperTileGrid {
    int anchor = 0;                // corner class: x+y mod 4 == 2*anchor
    std::vector<SuperTile> tiles;  // scan order: v ascending, then u ascending
    int u0 = 0, v0 = 0, u1 = 0, v1 = 0;  // inclusive grid bounds

    int width() const { return u1 - u0 + 1; }
    int height() const { return v1 - v0 + 1; }
    std::optional<int> index_at(int u, int v) const;

private:
    friend SuperTileGrid partition_supertiles(const PartialColoring&, int);
    std::vector<int32_t> index_;   // dense (u,v) -> tile index or -1
};

// Splits the coloured window into super-tiles of the given anchor class
// (0 or 1). Only super-tiles with all four members inside the window are
// kept; an incomplete colouring on those members is rejected.
SuperTileGrid partition_supertiles(const PartialColoring& coloring, int anchor);

// Pattern ids in first-encounter order over the grid's scan order.
std::vector<int> recolor(const SuperTileGrid& grid);

// The anchor class (0 or 1) whose pattern census is smallest for this field.
int canonical_anchor(const PartialColoring& coloring);

enum class Dimensionality : uint8_t { OneD, TwoD };

struct Component {
    int id = 0;
    int pattern = 0;                       // PatternId of its super-tiles
    int size = 0;                          // number of super-tiles
    Dimensionality dim = Dimensionality::OneD;
    std::vector<std::pair<int, int>> translations;  // validated grid vectors
    bool boundary_flagged = false;         // absorbed truncated edge sliver
};

enum class RelationKind : uint8_t { Adjoined, SeparatedByInterface, GrainBoundary };

struct Relation {
    int a = 0, b = 0;                      // component ids
    RelationKind kind = RelationKind::Adjoined;
    int via = -1;                          // mediating 1D component, if any
};

struct CrystalDecomposition {
    SuperTileGrid grid;
    std::vector<int> pattern_ids;          // per super-tile
    std::vector<int> component_of;         // per super-tile
    std::vector<Component> components;
    std::vector<Relation> relations;

    int pattern_census() const;
    // Components grouped by pattern id; "crystals" in the sense that two
    // components with the same super-tile pattern belong to one crystal.
    int distinct_crystals() const;
};

// Connected equal-pattern regions of the recoded field, tagged 1D/2D by the
// rank of their validated translation vectors, with pairwise relations.
CrystalDecomposition decompose(const PartialColoring& coloring);

std::vector<Relation> classify_relations(const CrystalDecomposition& d);

// One line per component (id, kind, pattern, translations, area), then the
// relation list.
void write_component_report(std::ostream& out, const CrystalDecomposition& d);

}  // namespace bw
