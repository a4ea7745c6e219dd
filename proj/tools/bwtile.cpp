// bwtile: colour-constrained basketweave tilings from the command line.
//
// Subcommands: classify, grow, automaton, coordseq, crystals, search,
// render, geometry. Exit codes: 0 success, 2 input error, 3 search budget
// exhausted, 4 internal invariant violation.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "basketweave/analysis.hpp"
#include "basketweave/automaton.hpp"
#include "basketweave/coloring.hpp"
#include "basketweave/geometry.hpp"
#include "basketweave/render.hpp"
#include "basketweave/seed_io.hpp"

namespace {

using namespace bw;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

std::vector<int> parse_schedule(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error("bad schedule entry: " + item);
        }
    }
    if (out.empty()) throw input_error("empty schedule");
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    return out;
}

void write_or_print(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
    } else {
        auto out = open_out(path);
        out << payload;
    }
}

Adjacency parse_kind(const std::string& kind) {
    if (kind == "full") return Adjacency::Full;
    if (kind == "edge") return Adjacency::EdgeOnly;
    throw input_error("--kind must be full or edge");
}

std::vector<TileId> seed_tiles(const Seed& s) {
    std::vector<TileId> tiles;
    for (const auto& [t, c] : s.tiles()) tiles.push_back(t);
    return tiles;
}

int cmd_classify(const std::string& seed_path, const std::string& schedule_text,
                 const std::string& out_path) {
    const Seed seed = load_seed_file(seed_path);
    const ClassificationReport rep = classify(seed, parse_schedule(schedule_text));
    std::ostringstream text;
    text << rep.to_string() << "\n";
    text << "forced tiles: " << rep.forced.colored_count() << " of "
         << rep.forced.window.tile_count() << "\n";
    std::cout << text.str();
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        RenderSpec spec;
        spec.markers = seed_tiles(seed);
        render_field(out, rep.forced, spec);
    }
    return kExitOk;
}

int cmd_grow(const std::string& seed_path, int radius, const std::string& out_path) {
    const Seed seed = load_seed_file(seed_path);
    const PartialColoring pc = padded_field_of_forcing(seed, radius);
    std::ostringstream text;
    text << "# forcing fixpoint, radius " << radius << "\n";
    text << "# contradiction: " << (pc.contradiction ? "yes" : "no") << "\n";
    for (const auto& [t, c] : pc.colored_tiles())
        text << t.i << ' ' << t.j << ' ' << t.slot << ' ' << color_name(c) << '\n';
    write_or_print(out_path, text.str());
    return kExitOk;
}

int cmd_automaton(const std::string& seed_path, int ticks, const std::string& out_path,
                  const std::string& frames_dir) {
    if (ticks < 1) throw input_error("--ticks must be >= 1");
    const Seed seed = load_seed_file(seed_path);
    const std::vector<TileId> tiles = seed_tiles(seed);
    std::ostringstream csv;
    csv << "s,V,Y,C\n";
    if (tiles.empty()) {
        for (int s = 1; s <= ticks; ++s) csv << s << ",0,0,0\n";
        write_or_print(out_path, csv.str());
        return kExitOk;
    }
    GreyGrowth growth(tiles, ticks);
    for (int s = 1; s <= ticks; ++s) {
        const std::vector<TileId> before = growth.grey_tiles();
        const StepReport rep = growth.step();
        csv << s << ',' << rep.V() << ',' << rep.Y() << ',' << rep.C() << '\n';
        if (!frames_dir.empty()) {
            std::filesystem::create_directories(frames_dir);
            char name[32];
            std::snprintf(name, sizeof name, "frame_%04d.svg", s);
            auto out = open_out((std::filesystem::path(frames_dir) / name).string());
            int r = 2;
            for (const TileId& t : growth.grey_tiles())
                r = std::max({r, std::abs(t.i) + 2, std::abs(t.j) + 2});
            render_automaton_frame(out, Window{0, 0, r}, before, rep, RenderSpec{});
        }
    }
    write_or_print(out_path, csv.str());
    return kExitOk;
}

int cmd_coordseq(const std::string& kind, int s_max, const std::string& out_path) {
    if (s_max < 0) throw input_error("--ticks must be >= 0");
    const auto seq = coordination_sequence(TileId{0, 0, 0}, parse_kind(kind), s_max);
    std::ostringstream csv;
    csv << "s,count\n";
    for (size_t s = 0; s < seq.size(); ++s) csv << s << ',' << seq[s] << '\n';
    write_or_print(out_path, csv.str());
    return kExitOk;
}

int cmd_crystals(const std::string& seed_path, int radius, const std::string& out_path) {
    const Seed seed = load_seed_file(seed_path);
    const PartialColoring pc = padded_field_of_forcing(seed, radius);
    const CrystalDecomposition d = decompose(pc);
    std::ostringstream text;
    write_component_report(text, d);
    write_or_print(out_path, text.str());
    return kExitOk;
}

int cmd_search(int k, int patch, int r_test, const std::string& out_path) {
    SearchBudget budget;
    budget.r_test = r_test;
    const SearchResult res = search_perfect_seeds(k, Window{0, 0, patch}, budget);
    std::ostringstream text;
    text << "# perfect-seed search: k=" << k << " patch radius " << patch
         << " test radius " << r_test << "\n";
    text << "# candidates examined: " << res.candidates_examined << "\n";
    if (res.budget_exhausted) text << "# budget exhausted: search incomplete\n";
    else if (res.found.empty()) text << "# exhausted patch: no perfect seeds\n";
    int index = 0;
    for (const Seed& s : res.found) {
        text << "# seed " << index++ << " (canonical form)\n";
        for (const auto& [t, c] : s.tiles())
            text << t.i << ' ' << t.j << ' ' << t.slot << ' ' << color_name(c) << '\n';
    }
    write_or_print(out_path, text.str());
    return res.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_render(const std::string& view, const std::string& seed_path, int radius, int ticks,
               const std::string& out_path) {
    const Seed seed = load_seed_file(seed_path);
    if (out_path.empty()) throw input_error("render requires --out");
    auto out = open_out(out_path);
    RenderSpec spec;
    spec.markers = seed_tiles(seed);

    if (view == "field") {
        render_field(out, padded_field_of_forcing(seed, radius), spec);
    } else if (view == "candidates") {
        if (radius > 6) throw input_error("candidates view: radius must be <= 6");
        render_candidates(out, exact_candidates(seed, Window{0, 0, radius}), spec);
    } else if (view == "components" || view == "patterns") {
        const PartialColoring pc = padded_field_of_forcing(seed, radius);
        const CrystalDecomposition d = decompose(pc);
        if (view == "components") render_components(out, d, spec);
        else render_patterns(out, d, spec);
    } else if (view == "automaton-frame") {
        const std::vector<TileId> tiles = seed_tiles(seed);
        if (tiles.empty()) throw input_error("automaton-frame: seed is empty");
        if (ticks < 1) throw input_error("--ticks must be >= 1");
        GreyGrowth growth(tiles, ticks);
        StepReport rep;
        std::vector<TileId> before;
        for (int s = 1; s <= ticks; ++s) {
            before = growth.grey_tiles();
            rep = growth.step();
        }
        int r = 2;
        for (const TileId& t : growth.grey_tiles())
            r = std::max({r, std::abs(t.i) + 2, std::abs(t.j) + 2});
        render_automaton_frame(out, Window{0, 0, r}, before, rep, spec);
    } else {
        throw input_error("unknown view: " + view);
    }
    return kExitOk;
}

int cmd_geometry() {
    std::ostringstream text;
    const MountOffsets mo = mount_offsets();
    char buf[256];
    std::snprintf(buf, sizeof buf, "mount offsets: p=%.9f q=%.9f\n", mo.p, mo.q);
    text << buf;
    const RotationBound rb = free_rotation_bound();
    std::snprintf(buf, sizeof buf,
                  "molecule diameter: %.9f, free-rotation limit: %.9f -> %s\n",
                  rb.molecule_diameter, rb.free_rotation_limit,
                  rb.can_rotate_freely ? "can rotate freely" : "cannot rotate freely");
    text << buf;
    const FourCellDistances fc = four_cell_distances(default_four_cell_config());
    std::snprintf(buf, sizeof buf, "four-cell distances: ab=%.9f ac=%.9f ad=%.9f ae=%.9f\n",
                  fc.ab, fc.ac, fc.ad, fc.ae);
    text << buf;
    std::snprintf(buf, sizeof buf, "rectangle at a: p=%.9f q=%.9f\n", fc.rect_p, fc.rect_q);
    text << buf;
    const PhaseShift ps = phase_shift_permutation();
    text << "phase shift permutation:";
    for (int c = 0; c < kColorCount; ++c) {
        std::snprintf(buf, sizeof buf, " %c->%c", color_name(static_cast<Color>(c)),
                      color_name(ps.permutation[static_cast<size_t>(c)]));
        text << buf;
    }
    std::snprintf(buf, sizeof buf, "\nphase shift pose distance from group: %.2e\n",
                  ps.group_distance);
    text << buf;
    const auto cfg = default_four_cell_config();
    std::snprintf(buf, sizeof buf, "four-cell min same-colour distance: %.9f\n",
                  min_same_color_distance({cfg.begin(), cfg.end()}));
    text << buf;
    std::cout << text.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colour-constrained tilings on the basketweave domino lattice"};
    app.require_subcommand(1);

    std::string seed_path, out_path, frames_dir, schedule = "2,3,4", kind = "full";
    std::string view;
    int radius = 8, ticks = 43, k = 5, patch = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_seed) {
        if (needs_seed) cmd->add_option("--seed", seed_path, "seed file")->required();
        cmd->add_option("--out", out_path, "output path");
    };

    auto* c_classify = app.add_subcommand("classify", "barren/fertile/perfect classification");
    add_common(c_classify, true);
    c_classify->add_option("--schedule", schedule, "radius schedule, e.g. 2,3,4");

    auto* c_grow = app.add_subcommand("grow", "dump the forcing fixpoint");
    add_common(c_grow, true);
    c_grow->add_option("--radius", radius, "window radius in blocks");

    auto* c_auto = app.add_subcommand("automaton", "grey growth sequences as CSV");
    add_common(c_auto, true);
    c_auto->add_option("--ticks", ticks, "number of steps");
    c_auto->add_option("--frames", frames_dir, "directory for per-tick SVG frames");

    auto* c_coord = app.add_subcommand("coordseq", "coordination sequence as CSV");
    c_coord->add_option("--kind", kind, "full or edge");
    c_coord->add_option("--ticks", ticks, "maximum distance");
    c_coord->add_option("--out", out_path, "output path");

    auto* c_cryst = app.add_subcommand("crystals", "crystal decomposition report");
    add_common(c_cryst, true);
    c_cryst->add_option("--radius", radius, "window radius in blocks");

    auto* c_search = app.add_subcommand("search", "exhaustive perfect-seed search");
    c_search->add_option("--k", k, "seed size");
    c_search->add_option("--patch", patch, "patch radius in blocks");
    c_search->add_option("--radius", radius, "perfection test radius");
    c_search->add_option("--out", out_path, "output path");

    auto* c_render = app.add_subcommand("render", "SVG views of fields and runs");
    c_render->add_option("view", view, "field|candidates|components|patterns|automaton-frame")
        ->required();
    add_common(c_render, true);
    c_render->add_option("--radius", radius, "window radius in blocks");
    c_render->add_option("--ticks", ticks, "tick for automaton-frame");

    auto* c_geom = app.add_subcommand("geometry", "molecule geometry checks");
    (void)c_geom;

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return cmd_classify(seed_path, schedule, out_path);
        if (c_grow->parsed()) return cmd_grow(seed_path, radius, out_path);
        if (c_auto->parsed()) return cmd_automaton(seed_path, ticks, out_path, frames_dir);
        if (c_coord->parsed()) return cmd_coordseq(kind, ticks, out_path);
        if (c_cryst->parsed()) return cmd_crystals(seed_path, radius, out_path);
        if (c_search->parsed()) return cmd_search(k, patch, radius, out_path);
        if (c_render->parsed()) return cmd_render(view, seed_path, radius, ticks, out_path);
        if (c_geom->parsed()) return cmd_geometry();
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
