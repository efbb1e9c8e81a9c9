#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "diffposet/poset.hpp"

namespace diffposet {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line)
    {
    }
};

// diffposet-hasse v1: a `rank_sizes: p0 p1 ... pN` header, an optional
// `r: <int>` line, then one `edge <n>:<i> <n+1>:<j>` line per cover edge
// with 0-based indices. `#` starts a comment. Writers may embed element
// labels as `# label <n>:<i> <text>` comments; the parser picks those up
// when they are complete, and ignores them otherwise.
GradedPoset parse_hasse(std::istream& in);
GradedPoset parse_hasse_file(const std::string& path);

void write_hasse(std::ostream& out, const GradedPoset& poset);
void write_hasse_file(const std::string& path, const GradedPoset& poset);

} // namespace diffposet
