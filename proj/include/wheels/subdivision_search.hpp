#pragma once

#include <optional>

#include "wheels/graph.hpp"

namespace wheels {

enum class search_status { found, not_found, budget_exhausted };

struct search_outcome {
    search_status status = search_status::not_found;
    // Present iff status == found: the located W_k-subdivision with its
    // degree-2 vertices contracted away (passes is_k_wheel).
    std::optional<graph> witness;
};

// Exhaustive search for a W_k-subdivision as a subgraph of g. Recursive
// edge-removal scheme: drop degree-0 vertices, accept if the current graph
// is itself a W_k-subdivision, prune when |E| <= 2k, |V| < k+1 or no vertex
// has degree >= k, otherwise branch on deleting each edge at or above the
// lexicographic cursor. The input graph is never mutated.
//
// budget < 0 means unlimited; otherwise every search node consumes one unit
// and exhaustion yields status budget_exhausted. jobs > 1 evaluates the
// top-level branches concurrently (only when the budget is unlimited); the
// outcome is identical to the sequential search. Requires k >= 3.
search_outcome find_k_wheel(const graph& g, int k, long long budget = -1,
                            int jobs = 1);

}  // namespace wheels
