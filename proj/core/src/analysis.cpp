#include "basketweave/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <tuple>

#include "basketweave/seed_io.hpp"

namespace bw {

std::optional<int> SuperTileGrid::index_at(int u, int v) const {
    if (u < u0 || u > u1 || v < v0 || v > v1) return std::nullopt;
    const int32_t k = index_[static_cast<size_t>((v - v0) * width() + (u - u0))];
    if (k < 0) return std::nullopt;
    return k;
}

SuperTileGrid partition_supertiles(const PartialColoring& coloring, int anchor) {
    if (anchor != 0 && anchor != 1)
        throw input_error("partition_supertiles: anchor must be 0 or 1");
    if (coloring.contradiction || !coloring.complete())
        throw input_error("partition_supertiles: colouring must be complete");

    const Window& w = coloring.window;
    SuperTileGrid grid;
    grid.anchor = anchor;

    // candidate pinwheel corners: even points with x+y = 2*anchor (mod 4)
    const int x_lo = 2 * (w.ci - w.r);
    const int x_hi = 2 * (w.ci + w.r) + 2;
    const int y_lo = 2 * (w.cj - w.r);
    const int y_hi = 2 * (w.cj + w.r) + 2;
    for (int y = y_lo; y <= y_hi; y += 2) {
        for (int x = x_lo; x <= x_hi; x += 2) {
            if ((((x + y) % 4) + 4) % 4 != 2 * anchor) continue;
            SuperTile st;
            st.x = x;
            st.y = y;
            st.u = (x + y - 2 * anchor) / 4;
            st.v = (x - y - 2 * anchor) / 4;
            st.members = {tile_of_square({x - 1, y - 1}), tile_of_square({x, y - 1}),
                          tile_of_square({x - 1, y}), tile_of_square({x, y})};
            std::sort(st.members.begin(), st.members.end());
            bool ok = true;
            for (size_t k = 0; k < 4 && ok; ++k) {
                const auto c = coloring.color_of(st.members[k]);
                if (!c)
                    ok = false;
                else
                    st.pattern[k] = static_cast<uint8_t>(*c);
            }
            if (ok) grid.tiles.push_back(st);
        }
    }
    if (grid.tiles.empty()) return grid;

    grid.u0 = grid.u1 = grid.tiles.front().u;
    grid.v0 = grid.v1 = grid.tiles.front().v;
    for (const SuperTile& st : grid.tiles) {
        grid.u0 = std::min(grid.u0, st.u);
        grid.u1 = std::max(grid.u1, st.u);
        grid.v0 = std::min(grid.v0, st.v);
        grid.v1 = std::max(grid.v1, st.v);
    }
    std::sort(grid.tiles.begin(), grid.tiles.end(), [](const SuperTile& a, const SuperTile& b) {
        return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
    grid.index_.assign(static_cast<size_t>(grid.width()) * static_cast<size_t>(grid.height()),
                       -1);
    for (int k = 0; k < static_cast<int>(grid.tiles.size()); ++k) {
        const SuperTile& st = grid.tiles[static_cast<size_t>(k)];
        grid.index_[static_cast<size_t>((st.v - grid.v0) * grid.width() + (st.u - grid.u0))] =
            k;
    }
    return grid;
}

std::vector<int> recolor(const SuperTileGrid& grid) {
    std::vector<int> ids(grid.tiles.size());
    std::map<std::array<uint8_t, 4>, int> seen;
    for (size_t k = 0; k < grid.tiles.size(); ++k) {
        const auto [it, fresh] =
            seen.emplace(grid.tiles[k].pattern, static_cast<int>(seen.size()));
        ids[k] = it->second;
    }
    return ids;
}

int canonical_anchor(const PartialColoring& coloring) {
    int census[2];
    for (int anchor = 0; anchor < 2; ++anchor) {
        const SuperTileGrid grid = partition_supertiles(coloring, anchor);
        const std::vector<int> ids = recolor(grid);
        census[anchor] = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    }
    return census[1] < census[0] ? 1 : 0;
}

int CrystalDecomposition::pattern_census() const {
    int c = 0;
    for (int id : pattern_ids) c = std::max(c, id + 1);
    return c;
}

int CrystalDecomposition::distinct_crystals() const {
    std::vector<int> patterns;
    for (const Component& c : components) patterns.push_back(c.pattern);
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    return static_cast<int>(patterns.size());
}

namespace {

// translation d counts as validated when some super-tile starts a chain of
// three repeats inside the component
bool validated_translation(const CrystalDecomposition& d, int comp, int du, int dv) {
    for (const SuperTile& st : d.grid.tiles) {
        const auto base = d.grid.index_at(st.u, st.v);
        if (d.component_of[static_cast<size_t>(*base)] != comp) continue;
        bool ok = true;
        for (int k = 1; k <= 3 && ok; ++k) {
            const auto idx = d.grid.index_at(st.u + k * du, st.v + k * dv);
            ok = idx && d.component_of[static_cast<size_t>(*idx)] == comp;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

CrystalDecomposition decompose(const PartialColoring& coloring) {
    CrystalDecomposition d;
    d.grid = partition_supertiles(coloring, canonical_anchor(coloring));
    d.pattern_ids = recolor(d.grid);
    const int n = static_cast<int>(d.grid.tiles.size());
    d.component_of.assign(static_cast<size_t>(n), -1);

    for (int start = 0; start < n; ++start) {
        if (d.component_of[static_cast<size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(d.components.size());
        Component comp;
        comp.id = id;
        comp.pattern = d.pattern_ids[static_cast<size_t>(start)];
        std::deque<int> queue{start};
        d.component_of[static_cast<size_t>(start)] = id;
        while (!queue.empty()) {
            const int k = queue.front();
            queue.pop_front();
            ++comp.size;
            const SuperTile& st = d.grid.tiles[static_cast<size_t>(k)];
            for (const auto [du, dv] :
                 {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
                const auto idx = d.grid.index_at(st.u + du, st.v + dv);
                if (!idx) continue;
                if (d.component_of[static_cast<size_t>(*idx)] >= 0) continue;
                if (d.pattern_ids[static_cast<size_t>(*idx)] != comp.pattern) continue;
                d.component_of[static_cast<size_t>(*idx)] = id;
                queue.push_back(*idx);
            }
        }
        d.components.push_back(comp);
    }

    // translation vectors within a +-3 box; 2D = two independent directions
    for (Component& comp : d.components) {
        for (int dv = -3; dv <= 3; ++dv) {
            for (int du = -3; du <= 3; ++du) {
                if (du == 0 && dv == 0) continue;
                if (std::pair(du, dv) < std::pair(-du, -dv)) continue;  // one per direction
                if (validated_translation(d, comp.id, du, dv))
                    comp.translations.emplace_back(du, dv);
            }
        }
        bool rank2 = false;
        for (size_t a = 0; a < comp.translations.size() && !rank2; ++a)
            for (size_t b = a + 1; b < comp.translations.size() && !rank2; ++b)
                rank2 = comp.translations[a].first * comp.translations[b].second !=
                        comp.translations[a].second * comp.translations[b].first;
        comp.dim = rank2 ? Dimensionality::TwoD : Dimensionality::OneD;
    }

    d.relations = classify_relations(d);
    return d;
}

std::vector<Relation> classify_relations(const CrystalDecomposition& d) {
    const int nc = static_cast<int>(d.components.size());
    // contact[a][b] = number of grid edges between components a and b
    std::vector<std::map<int, int>> contact(static_cast<size_t>(nc));
    for (const SuperTile& st : d.grid.tiles) {
        const int a = d.component_of[static_cast<size_t>(*d.grid.index_at(st.u, st.v))];
        for (const auto [du, dv] : {std::pair{1, 0}, std::pair{0, 1}}) {
            const auto idx = d.grid.index_at(st.u + du, st.v + dv);
            if (!idx) continue;
            const int b = d.component_of[static_cast<size_t>(*idx)];
            if (a == b) continue;
            contact[static_cast<size_t>(std::min(a, b))][std::max(a, b)]++;
        }
    }

    std::vector<Relation> out;
    auto dim_of = [&](int id) { return d.components[static_cast<size_t>(id)].dim; };

    // adjacency between two 2D crystals
    for (int a = 0; a < nc; ++a)
        for (const auto& [b, edges] : contact[static_cast<size_t>(a)])
            if (dim_of(a) == Dimensionality::TwoD && dim_of(b) == Dimensionality::TwoD)
                out.push_back(Relation{a, b, RelationKind::Adjoined, -1});

    // The flanks of a 1D component are the two neighbours with the longest
    // contact (hub contacts where defect lines meet are single points).
    // Grain boundary when both flanks carry the same pattern, interface
    // otherwise.
    for (int line = 0; line < nc; ++line) {
        if (dim_of(line) != Dimensionality::OneD) continue;
        std::vector<std::pair<int, int>> sides;  // (-contact length, id)
        for (int a = 0; a < nc; ++a) {
            if (a == line) continue;
            const auto& row = contact[static_cast<size_t>(std::min(a, line))];
            const auto it = row.find(std::max(a, line));
            if (it != row.end()) sides.emplace_back(-it->second, a);
        }
        std::sort(sides.begin(), sides.end());
        if (sides.size() < 2) continue;
        const int a = std::min(sides[0].second, sides[1].second);
        const int b = std::max(sides[0].second, sides[1].second);
        const bool same_crystal = d.components[static_cast<size_t>(a)].pattern ==
                                  d.components[static_cast<size_t>(b)].pattern;
        out.push_back(Relation{a, b,
                               same_crystal ? RelationKind::GrainBoundary
                                            : RelationKind::SeparatedByInterface,
                               line});
    }

    std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) {
        return std::tuple(x.a, x.b, static_cast<int>(x.kind), x.via) <
               std::tuple(y.a, y.b, static_cast<int>(y.kind), y.via);
    });
    return out;
}

void write_component_report(std::ostream& out, const CrystalDecomposition& d) {
    out << "# components: " << d.components.size() << ", patterns: " << d.pattern_census()
        << ", crystals: " << d.distinct_crystals() << "\n";
    for (const Component& c : d.components) {
        out << "component " << c.id << ": "
            << (c.dim == Dimensionality::TwoD ? "2D" : "1D") << " pattern " << c.pattern
            << " area " << c.size << " translations";
        for (const auto& [du, dv] : c.translations) out << " (" << du << "," << dv << ")";
        if (c.boundary_flagged) out << " boundary-flagged";
        out << "\n";
    }
    for (const Relation& r : d.relations) {
        switch (r.kind) {
            case RelationKind::Adjoined:
                out << "relation: Adjoined(" << r.a << "," << r.b << ")\n";
                break;
            case RelationKind::SeparatedByInterface:
                out << "relation: SeparatedByInterface(" << r.a << "," << r.b << ") via "
                    << r.via << "\n";
                break;
            case RelationKind::GrainBoundary:
                out << "relation: GrainBoundary(" << r.a << "," << r.b << ") via " << r.via
                    << "\n";
                break;
        }
    }
}

}  // namespace bw
