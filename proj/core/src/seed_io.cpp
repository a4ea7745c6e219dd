#include "basketweave/seed_io.hpp"

#include <fstream>
#include <sstream>

namespace bw {

Seed load_seed(std::istream& in, const std::string& origin) {
    std::vector<std::pair<TileId, Color>> tiles;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto at = [&] { return origin + ":" + std::to_string(line_no); };
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream fields{std::string(sv)};
        TileId t;
        std::string color_token;
        if (!(fields >> t.i >> t.j >> t.slot >> color_token))
            throw input_error(at() + ": expected `i j slot color`");
        if (t.slot != 0 && t.slot != 1)
            throw input_error(at() + ": slot must be 0 or 1");
        if (color_token.size() != 1)
            throw input_error(at() + ": color must be one of R,B,Y,G");
        const auto c = color_from_name(color_token[0]);
        if (!c) throw input_error(at() + ": color must be one of R,B,Y,G");
        std::string trailing;
        if (fields >> trailing) throw input_error(at() + ": trailing fields");
        for (const auto& [existing, ec] : tiles) {
            if (existing == t) throw input_error(at() + ": duplicate tile");
        }
        tiles.emplace_back(t, *c);
    }
    return Seed(std::move(tiles));
}

Seed load_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open seed file: " + path);
    return load_seed(in, path);
}

void save_seed(std::ostream& out, const Seed& s) {
    out << "# i j slot color\n";
    for (const auto& [tile, c] : s.tiles())
        out << tile.i << ' ' << tile.j << ' ' << tile.slot << ' ' << color_name(c) << '\n';
}

void save_seed_file(const std::string& path, const Seed& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    save_seed(out, s);
}

}  // namespace bw
