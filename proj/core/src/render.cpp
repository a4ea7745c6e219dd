#include "basketweave/render.hpp"

#include <ostream>

namespace bw {
namespace {

// pixel frame around a window: unit square (x, y) maps to
// ((x - x0) * s, (y1 - 1 - y) * s) with the y axis flipped
struct Frame {
    int x0, y0, x1, y1;   // unit-square bounds, half-open
    int s;

    static Frame of(const Window& w, int cell_px) {
        return Frame{2 * (w.ci - w.r), 2 * (w.cj - w.r), 2 * (w.ci + w.r) + 2,
                     2 * (w.cj + w.r) + 2, cell_px};
    }
    int width() const { return (x1 - x0) * s; }
    int height() const { return (y1 - y0) * s; }
    int px(int x) const { return (x - x0) * s; }
    int py(int y) const { return (y1 - y) * s; }   // top edge of square row y
};

void open_svg(std::ostream& out, const Frame& f) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\""
        << f.height() << "\" viewBox=\"0 0 " << f.width() << " " << f.height() << "\">\n"
        << "<rect width=\"" << f.width() << "\" height=\"" << f.height()
        << "\" fill=\"#ffffff\"/>\n";
}

void tile_rect_svg(std::ostream& out, const Frame& f, const TileId& t, const char* fill) {
    const TileRect r = tile_rect(t);
    out << "<rect x=\"" << f.px(r.x0) << "\" y=\"" << f.py(r.y1) << "\" width=\""
        << (r.x1 - r.x0) * f.s << "\" height=\"" << (r.y1 - r.y0) * f.s << "\" fill=\"" << fill
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

void marker_svg(std::ostream& out, const Frame& f, const TileId& t) {
    const TileRect r = tile_rect(t);
    const int cx = (f.px(r.x0) + f.px(r.x1)) / 2;
    const int cy = (f.py(r.y1) + f.py(r.y0)) / 2;
    const int d = f.s / 3;
    out << "<path d=\"M" << cx - d << " " << cy - d << " L" << cx + d << " " << cy + d << " M"
        << cx - d << " " << cy + d << " L" << cx + d << " " << cy - d
        << "\" stroke=\"#000000\" stroke-width=\"2\" fill=\"none\"/>\n";
}

void legend_svg(std::ostream& out, const Frame& f, const std::vector<std::string>& entries) {
    int y = 4;
    for (const std::string& e : entries) {
        out << "<text x=\"4\" y=\"" << y + 10 << "\" font-family=\"monospace\" font-size=\"10\">"
            << e << "</text>\n";
        y += 12;
        (void)f;
    }
}

// fixed palettes for pattern / component ids
constexpr const char* kPatternHex[] = {"#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
                                       "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3"};
constexpr const char* kComponentHex[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                         "#66a61e", "#e6ab02", "#a6761d", "#666666",
                                         "#80b1d3", "#fb8072"};

}  // namespace

void render_field(std::ostream& out, const PartialColoring& pc, const RenderSpec& spec) {
    const Frame f = Frame::of(pc.window, spec.cell_px);
    open_svg(out, f);
    for (int idx = 0; idx < pc.window.tile_count(); ++idx) {
        const TileId t = pc.window.tile_at(idx);
        const uint8_t c = pc.colors[static_cast<size_t>(idx)];
        tile_rect_svg(out, f, t, c == kNoColor ? "#ffffff" : kColorHex[c]);
    }
    for (const TileId& t : spec.markers)
        if (pc.window.contains(t)) marker_svg(out, f, t);
    if (spec.legend) legend_svg(out, f, {"R B Y G field"});
    out << "</svg>\n";
}

void render_candidates(std::ostream& out, const CandidateMap& cm, const RenderSpec& spec) {
    const Frame f = Frame::of(cm.window, spec.cell_px);
    open_svg(out, f);
    for (int idx = 0; idx < cm.window.tile_count(); ++idx) {
        const TileId t = cm.window.tile_at(idx);
        const uint8_t mask = cm.masks[static_cast<size_t>(idx)];
        if (auto c = cm.singleton_color(idx)) {
            tile_rect_svg(out, f, t, kColorHex[static_cast<int>(*c)]);
            continue;
        }
        tile_rect_svg(out, f, t, "#ffffff");
        const TileRect r = tile_rect(t);
        const int cx = (f.px(r.x0) + f.px(r.x1)) / 2;
        const int cy = (f.py(r.y1) + f.py(r.y0)) / 2;
        int k = 0;
        for (int c = 0; c < kColorCount; ++c) {
            if (!(mask & (1u << c))) continue;
            const int dx = (k % 2) * (f.s / 2) - f.s / 4;
            const int dy = (k / 2) * (f.s / 2) - f.s / 4;
            out << "<circle cx=\"" << cx + dx << "\" cy=\"" << cy + dy << "\" r=\""
                << f.s / 6 << "\" fill=\"" << kColorHex[c] << "\"/>\n";
            ++k;
        }
    }
    if (spec.legend) legend_svg(out, f, {"dots: remaining candidates"});
    out << "</svg>\n";
}

void render_components(std::ostream& out, const CrystalDecomposition& d,
                       const RenderSpec& spec) {
    const Frame f = Frame::of(d.grid.tiles.empty() ? Window{0, 0, 0}
                                                   : Window{0, 0, 1},
                              spec.cell_px);
    // frame from the underlying unit extent of the grid
    Frame g = f;
    if (!d.grid.tiles.empty()) {
        int x0 = d.grid.tiles.front().x, x1 = x0, y0 = d.grid.tiles.front().y, y1 = y0;
        for (const SuperTile& st : d.grid.tiles) {
            x0 = std::min(x0, st.x - 2);
            x1 = std::max(x1, st.x + 2);
            y0 = std::min(y0, st.y - 2);
            y1 = std::max(y1, st.y + 2);
        }
        g = Frame{x0, y0, x1, y1, spec.cell_px};
    }
    open_svg(out, g);
    for (size_t k = 0; k < d.grid.tiles.size(); ++k) {
        const int comp = d.component_of[k];
        for (const TileId& t : d.grid.tiles[k].members)
            tile_rect_svg(out, g, t, kComponentHex[static_cast<size_t>(comp) % 10]);
    }
    for (const TileId& t : spec.markers) marker_svg(out, g, t);
    if (spec.legend) legend_svg(out, g, {"components"});
    out << "</svg>\n";
}

void render_patterns(std::ostream& out, const CrystalDecomposition& d, const RenderSpec& spec) {
    Frame g{0, 0, 2, 2, spec.cell_px};
    if (!d.grid.tiles.empty()) {
        int x0 = d.grid.tiles.front().x, x1 = x0, y0 = d.grid.tiles.front().y, y1 = y0;
        for (const SuperTile& st : d.grid.tiles) {
            x0 = std::min(x0, st.x - 2);
            x1 = std::max(x1, st.x + 2);
            y0 = std::min(y0, st.y - 2);
            y1 = std::max(y1, st.y + 2);
        }
        g = Frame{x0, y0, x1, y1, spec.cell_px};
    }
    open_svg(out, g);
    for (size_t k = 0; k < d.grid.tiles.size(); ++k) {
        const int pat = d.pattern_ids[k];
        for (const TileId& t : d.grid.tiles[k].members)
            tile_rect_svg(out, g, t, kPatternHex[static_cast<size_t>(pat) % 8]);
    }
    for (const TileId& t : spec.markers) marker_svg(out, g, t);
    if (spec.legend) legend_svg(out, g, {"pattern classes"});
    out << "</svg>\n";
}

void render_automaton_frame(std::ostream& out, const Window& region,
                            const std::vector<TileId>& grey, const StepReport& step,
                            const RenderSpec& spec) {
    const Frame f = Frame::of(region, spec.cell_px);
    open_svg(out, f);
    for (int idx = 0; idx < region.tile_count(); ++idx)
        tile_rect_svg(out, f, region.tile_at(idx), "#ffffff");
    for (const TileId& t : grey) tile_rect_svg(out, f, t, kGreyHex);
    for (const TileId& t : step.yellow) tile_rect_svg(out, f, t, kYellowHex);
    for (const TileId& t : step.violet) tile_rect_svg(out, f, t, kVioletHex);
    if (spec.legend) legend_svg(out, f, {"grey / yellow / violet"});
    out << "</svg>\n";
}

}  // namespace bw
