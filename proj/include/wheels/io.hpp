#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wheels/graph.hpp"

namespace wheels {

// Raised on malformed edge-list input; line is 1-based and also embedded in
// the what() message.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Edge-list format: first significant line `n m` (vertex count, edge
// count), then exactly m lines `u v` with u < v. Lines starting with `#`
// and blank lines are ignored. n must equal the number of distinct
// endpoints (isolated vertices are not representable in this format).
graph read_edge_list(std::istream& in);
graph read_edge_list_file(const std::string& path);  // wraps errors with path

// Writes the same format: header, then edges sorted lexicographically.
void write_edge_list(std::ostream& out, const graph& g);
std::string to_edge_list(const graph& g);

// Undirected DOT: one `u -- v;` line per edge (u < v, lexicographic),
// preceded by a bare `u;` statement for each isolated vertex.
std::string to_dot(const graph& g);

}  // namespace wheels
