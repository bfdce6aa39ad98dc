#pragma once

#include <vector>

#include "wheels/graph.hpp"

namespace wheels {

// How within-region neighbour enumeration deduplicates an edge whose far
// endpoint lies in the same region and was already the primary endpoint:
// `intent` skips every such edge (each within-region edge is subdivided at
// most once per configuration class); `literal` reproduces the historical
// behaviour of only comparing against the immediately preceding region
// member.
enum class skip_mode { intent, literal };

// One endpoint placement for a generated path: either an existing vertex,
// or a fresh vertex subdividing the edge anchor-edge_other.
struct attachment_spec {
    enum class kind_t { existing_vertex, new_vertex_on_edge };
    kind_t kind = kind_t::existing_vertex;
    vertex_id anchor = -1;
    vertex_id edge_other = -1;  // meaningful iff kind == new_vertex_on_edge
    bool operator==(const attachment_spec&) const = default;
};

// Ordered list of generated graphs that contain no W_k-subdivision, plus
// the run counters needed for reporting.
struct exception_list {
    int k = 0;
    std::vector<graph> graphs;  // generation order, duplicates retained
    long long candidates_tested = 0;
    long long skipped_not_3connected = 0;  // wheelproof only
    bool budget_exhausted = false;
};

// Builds W_{k-1} (hub 0), attaches a new vertex u to the hub, and
// enumerates every deduplicated pair of attachments (u1, u2) joining u to
// the rest of the graph — each attachment an existing non-hub, non-u vertex
// or a fresh vertex subdividing an existing edge (edges incident to u
// excluded). Candidates that contain no W_k-subdivision and are 3-connected
// are emitted; candidates failing 3-connectivity are counted as skipped.
// jobs > 1 tests candidates concurrently with identical output; budget >= 0
// bounds each candidate's search and aborts the run on exhaustion.
// Requires k >= 4 (std::invalid_argument otherwise).
exception_list wheelproof(int k, int jobs = 1, long long budget = -1);

// For every pair (i in a, j in b) enumerates the four endpoint
// configurations of one new path joining the regions: existing-existing,
// new-vertex-near-i with existing j, existing i with new-vertex-near-j, and
// new-vertex-near-j with new-vertex-near-i. Each candidate that fails to
// contain a W_k-subdivision enters the list; g is restored between
// candidates and never mutated. a and b must be nonempty, disjoint,
// duplicate-free sets of live vertices.
exception_list exception_generator(const graph& g, const vertex_set& a,
                                   const vertex_set& b, int k,
                                   skip_mode mode = skip_mode::intent,
                                   int jobs = 1, long long budget = -1);

// Number of candidate graphs exception_generator will test for these
// arguments (identical enumeration, no searching).
long long candidate_count(const graph& g, const vertex_set& a,
                          const vertex_set& b,
                          skip_mode mode = skip_mode::intent);

}  // namespace wheels
