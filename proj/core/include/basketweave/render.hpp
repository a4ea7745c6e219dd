#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "basketweave/analysis.hpp"
#include "basketweave/automaton.hpp"
#include "basketweave/coloring.hpp"

namespace bw {

// Fixed palette; outputs are byte-identical across runs.
inline constexpr const char* kColorHex[kColorCount] = {"#d62728", "#1f77b4", "#e8c547",
                                                       "#2ca02c"};
inline constexpr const char* kGreyHex = "#bbbbbb";
inline constexpr const char* kYellowHex = "#e8c547";
inline constexpr const char* kVioletHex = "#9467bd";

struct RenderSpec {
    int cell_px = 12;       // pixel size of one unit square
    bool legend = false;
    std::vector<TileId> markers;   // tiles marked with an 'x' (seed positions)
};

// Window colouring; uncoloured tiles stay white.
void render_field(std::ostream& out, const PartialColoring& pc, const RenderSpec& spec);

// Candidate sets: singletons filled, wider domains drawn as colour dots.
void render_candidates(std::ostream& out, const CandidateMap& cm, const RenderSpec& spec);

// Super-tiles filled by component id.
void render_components(std::ostream& out, const CrystalDecomposition& d,
                       const RenderSpec& spec);

// Super-tiles filled by pattern id, seed positions marked.
void render_patterns(std::ostream& out, const CrystalDecomposition& d, const RenderSpec& spec);

// One automaton tick: grey set plus the tiles about to be painted.
void render_automaton_frame(std::ostream& out, const Window& region,
                            const std::vector<TileId>& grey, const StepReport& step,
                            const RenderSpec& spec);

}  // namespace bw
