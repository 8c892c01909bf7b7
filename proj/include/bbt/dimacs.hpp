#ifndef BBT_DIMACS_HPP
#define BBT_DIMACS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bbt/graph.hpp"

namespace bbt {

// DIMACS .col reader. Accepts `c` comment lines, one `p edge <n> <m>`
// header, then `e <u> <v>` lines with 1-based labels; LF or CRLF.
// Repeated `e` lines for the same pair are deduplicated. The header's
// edge count is advisory; a mismatch with the deduplicated count adds a
// note to `warnings` instead of failing (published .col files disagree
// with their own headers often enough that rejecting them is useless).
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Sorted `e` lines, LF endings, no comments. parse(write(g)) == g.
void write_dimacs(const Graph& g, std::ostream& out);
std::string write_dimacs(const Graph& g);

} // namespace bbt

#endif // BBT_DIMACS_HPP
