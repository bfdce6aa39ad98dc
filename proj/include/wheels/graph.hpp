#pragma once

#include <map>
#include <utility>
#include <vector>

namespace wheels {

using vertex_id = int;
// Ordered, duplicate-free collection of vertex ids.
using vertex_set = std::vector<vertex_id>;

struct graph_test_access;

// Mutable simple undirected graph with stable non-negative integer vertex
// ids. Ids are caller-chosen; deleting a vertex leaves a hole, and
// highest_id() never decreases (a dead id may be re-added by the caller).
// Adjacency lists are kept sorted ascending, so every traversal in the
// library is deterministic.
class graph {
public:
    graph() = default;

    // Adds an isolated vertex. Throws std::invalid_argument if v is
    // negative or already present.
    void add_vertex(vertex_id v);

    // Removes a vertex of degree 0. Throws std::invalid_argument if v is
    // not present or still has incident edges.
    void remove_vertex(vertex_id v);

    // Adds/removes the undirected edge ij. Self-loops, duplicate edges and
    // missing edges are reported as std::invalid_argument.
    void add_edge(vertex_id i, vertex_id j);
    void remove_edge(vertex_id i, vertex_id j);

    // Subdivides edge ij with v: removes ij, adds iv and vj. v must already
    // be present and isolated (add_vertex first, then expand_edge).
    void expand_edge(vertex_id i, vertex_id j, vertex_id v);

    // Inverse of expand_edge: deletes the degree-2 vertex v and joins its
    // two (necessarily distinct) neighbours unless they are already
    // adjacent. Throws std::invalid_argument if degree(v) != 2.
    void contract_vertex(vertex_id v);

    bool has_vertex(vertex_id v) const;
    bool has_edge(vertex_id i, vertex_id j) const;
    int degree(vertex_id v) const;
    const std::vector<vertex_id>& neighbors(vertex_id v) const;

    std::vector<vertex_id> vertices() const;                     // ascending
    std::vector<std::pair<vertex_id, vertex_id>> edges() const;  // u<v, lex

    // Read-only view of the adjacency structure, for allocation-free
    // traversal loops.
    const std::map<vertex_id, std::vector<vertex_id>>& adjacency() const {
        return adj_;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Largest id ever assigned; -1 if no vertex was ever added.
    vertex_id highest_id() const { return highest_id_; }

    // Equality is same live-id set and same edge set (highest_id ignored).
    bool operator==(const graph& other) const { return adj_ == other.adj_; }
    bool operator!=(const graph& other) const { return !(*this == other); }

    // Throws std::logic_error if internal invariants are violated
    // (asymmetric adjacency, loops, parallel edges, stale edge count, or
    // adjacency entries that refer to dead vertices).
    void validate() const;

private:
    std::map<vertex_id, std::vector<vertex_id>> adj_;
    int edge_count_ = 0;
    vertex_id highest_id_ = -1;

    std::vector<vertex_id>& adj_of(vertex_id v, const char* op);
    const std::vector<vertex_id>& adj_of(vertex_id v, const char* op) const;

    friend struct graph_test_access;
};

// Wheel W_k: hub 0 adjacent to every vertex of the rim cycle 1-2-...-k-1.
// k+1 vertices, 2k edges. Throws std::invalid_argument for k < 3.
graph make_wheel(int k);

}  // namespace wheels
