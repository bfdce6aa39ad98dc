#pragma once

#include <vector>

#include "wheels/graph.hpp"

namespace wheels {

// True iff g is connected and has no cut vertex (depth-first low-point
// computation). Single vertices and single edges count as 2-connected;
// graphs with unreachable vertices do not. Requires at least one vertex
// (std::invalid_argument otherwise); adjacency entries naming dead vertices
// raise std::logic_error.
bool is_2connected(const graph& g);

// True iff g has at least 4 vertices and g - v is 2-connected for every
// vertex v. Graphs with fewer than 4 vertices are never 3-connected.
bool is_3connected(const graph& g);

// Connected components of the subgraph induced on V(g) minus s. Each
// component is ascending; the list is ordered by smallest member. s must
// consist of distinct live vertices.
std::vector<vertex_set> components_minus(const graph& g, const vertex_set& s);

// Bridges of g relative to w: maximal vertex sets U such that any two
// members of U are joined by a path whose internal vertices all avoid w.
// With w empty this degenerates to the connected components. Each bridge is
// ascending; the list is sorted lexicographically. w must consist of
// distinct live vertices.
std::vector<vertex_set> bridges(const graph& g, const vertex_set& w);

}  // namespace wheels
