#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basketweave/lattice.hpp"

namespace bw {

enum class Color : uint8_t { R = 0, B = 1, Y = 2, G = 3 };

inline constexpr int kColorCount = 4;
inline constexpr char kColorNames[kColorCount + 1] = "RBYG";

inline char color_name(Color c) { return kColorNames[static_cast<int>(c)]; }
std::optional<Color> color_from_name(char c);

// A finite set of tiles with assigned colours. Kept sorted by tile id;
// duplicates are rejected at construction.
class Seed {
public:
    Seed() = default;
    explicit Seed(std::vector<std::pair<TileId, Color>> tiles);

    const std::vector<std::pair<TileId, Color>>& tiles() const { return tiles_; }
    size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }
    std::optional<Color> color_of(const TileId& t) const;
    bool contains(const TileId& t) const { return color_of(t).has_value(); }

    Seed without(const TileId& t) const;
    Seed transformed(const LatticeSymmetry& g) const;
    Seed recolored(const std::array<Color, kColorCount>& perm) const;

    // Smallest block radius around (0,0) containing every seed tile.
    int radius() const;

    friend auto operator<=>(const Seed&, const Seed&) = default;

private:
    std::vector<std::pair<TileId, Color>> tiles_;
};

inline constexpr uint8_t kNoColor = 0xff;

// Partial colouring of a window; colors[] holds a Color value or kNoColor.
struct PartialColoring {
    Window window;
    std::vector<uint8_t> colors;
    bool contradiction = false;

    bool has_color(int idx) const { return colors[static_cast<size_t>(idx)] != kNoColor; }
    int colored_count() const;
    bool complete() const;

    std::optional<Color> color_of(const TileId& t) const {
        if (auto idx = window.try_index_of(t)) {
            const uint8_t c = colors[static_cast<size_t>(*idx)];
            if (c != kNoColor) return static_cast<Color>(c);
        }
        return std::nullopt;
    }

    // Coloured tiles as a seed-style list, sorted by tile id.
    std::vector<std::pair<TileId, Color>> colored_tiles() const;
};

// Per-tile colour candidate bitmasks (bit k = Color k possible).
struct CandidateMap {
    Window window;
    std::vector<uint8_t> masks;
    bool window_barren = false;

    bool is_singleton(int idx) const;
    std::optional<Color> singleton_color(int idx) const;
};

struct AdjacencyViolation {
    TileId a, b;
    Color color;
};

// Every full-adjacent pair of seed tiles sharing a colour.
std::vector<AdjacencyViolation> validate_seed(const Seed& s);

// Fixpoint of the forcing rule on the window: an uncoloured tile whose
// coloured full-neighbours show exactly 3 distinct colours takes the fourth;
// a tile seeing all 4 colours (or an improper pair) raises the contradiction
// flag. Rounds are applied synchronously, so the result is independent of
// tile order. If rounds is non-null it receives, per tile index, the round
// at which the tile got its colour (0 for seed tiles, -1 for never).
PartialColoring propagate(const Seed& s, const Window& w, std::vector<int>* rounds = nullptr);

struct EnumerationResult {
    uint64_t count = 0;      // exact when capped == false
    bool capped = false;
    std::vector<PartialColoring> witnesses;  // up to two complete colourings
};

// Counts proper window colourings extending the seed, stopping at cap.
// Backtracking over candidate masks with unit propagation; tile selection is
// fewest-candidates-first (ties by index), colour order R,B,Y,G.
EnumerationResult enumerate_colorings(const Seed& s, const Window& w, uint64_t cap);

// Colour c survives for tile t iff some proper window colouring extending the
// seed assigns c to t. One solvability query per uncertified (tile, colour).
CandidateMap exact_candidates(const Seed& s, const Window& w);

// Singleton restriction of exact_candidates: the window analogue of the
// field F(S). contradiction flags window-barrenness.
PartialColoring field(const Seed& s, const Window& w);

// The forcing front cannot colour the extreme corner tiles of the very
// window it runs in (their neighbourhoods are truncated), so perfection at
// radius r is decided on a window padded by this many blocks and judged on
// the inner radius-r restriction. Padding keeps every derivation a valid
// plane derivation.
inline constexpr int kPerfectionPad = 2;

// True iff forcing propagation on the padded window colours every tile of
// the radius-r window around (ci, cj) without contradiction.
bool perfect_within_radius(const Seed& s, int r, int ci = 0, int cj = 0);

// propagate on the padded window, restricted to the radius-r window.
PartialColoring padded_field_of_forcing(const Seed& s, int r, int ci = 0, int cj = 0);

enum class Verdict : uint8_t {
    Barren,
    PerfectWithinRadius,
    FertileEvidence,
    Inconclusive,
};

struct ClassificationReport {
    Verdict verdict = Verdict::Inconclusive;
    int radius = 0;          // radius the verdict refers to
    bool dormant = false;    // FertileEvidence only: forced set equals the seed
    PartialColoring forced;  // forced set at `radius`
    std::vector<int> schedule;

    std::string to_string() const;
};

// Classifies the seed over a strictly increasing radius schedule:
//   Barren(r)              first scheduled radius with no window colouring;
//   PerfectWithinRadius(R) propagate fills the largest window, R = back();
//   FertileEvidence(R)     otherwise, if the exact forced set is identical at
//                          the last two scheduled radii (dormant when it
//                          equals the seed);
//   Inconclusive(R)        forced set still growing at the last two radii.
ClassificationReport classify(const Seed& s, const std::vector<int>& schedule);

struct SearchBudget {
    uint64_t max_candidates = std::numeric_limits<uint64_t>::max();
    int r_test = 8;          // radius of the perfection filter window
};

struct SearchResult {
    std::vector<Seed> found;         // canonical forms, deterministic order
    bool budget_exhausted = false;
    uint64_t candidates_examined = 0;
};

// Canonical representative of the seed's orbit under lattice symmetry and
// colour permutation (used for search deduplication).
Seed canonical_seed(const Seed& s);

// Exhaustive search over k-subsets of patch tiles with all colourings,
// deduplicated via canonical forms; a seed is reported when propagate fills
// the radius-r_test window around the patch centre with no contradiction.
SearchResult search_perfect_seeds(int k, const Window& patch, const SearchBudget& budget);

}  // namespace bw
