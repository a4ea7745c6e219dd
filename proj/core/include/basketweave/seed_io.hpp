#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "basketweave/coloring.hpp"

namespace bw {

// Raised on malformed input files and CLI arguments (exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Seed file format: '#' starts a comment line; data lines are
// "i j slot color" with color one of R,B,Y,G. Duplicate tiles are an error.
Seed load_seed(std::istream& in, const std::string& origin = "<stream>");
Seed load_seed_file(const std::string& path);

void save_seed(std::ostream& out, const Seed& s);
void save_seed_file(const std::string& path, const Seed& s);

}  // namespace bw
