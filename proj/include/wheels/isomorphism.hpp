#pragma once

#include <vector>

#include "wheels/graph.hpp"

namespace wheels {

// Exact isomorphism test: true iff some bijection of live vertices maps the
// edge set of g1 onto that of g2. Backtracking with degree-sequence and
// neighbourhood-degree pruning; intended for small graphs (<= ~25 vertices).
bool is_isomorphic(const graph& g1, const graph& g2);

struct iso_class {
    graph representative;             // first member encountered
    std::vector<int> member_indices;  // ascending indices into the input
};

struct iso_class_summary {
    std::vector<iso_class> classes;  // in order of first appearance
    int total = 0;                   // number of input graphs
};

// Greedy classification in list order: each graph joins the first class
// whose representative it matches, otherwise founds a new class.
iso_class_summary iso_classes(const std::vector<graph>& list);

}  // namespace wheels
