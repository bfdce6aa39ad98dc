#include "wheels/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace wheels {

namespace {

std::string vname(vertex_id v) { return std::to_string(v); }

// Sorted-vector insert/erase keep adjacency lists ascending.
void sorted_insert(std::vector<vertex_id>& vec, vertex_id v) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), v), v);
}

bool sorted_erase(std::vector<vertex_id>& vec, vertex_id v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it == vec.end() || *it != v) return false;
    vec.erase(it);
    return true;
}

bool sorted_contains(const std::vector<vertex_id>& vec, vertex_id v) {
    return std::binary_search(vec.begin(), vec.end(), v);
}

}  // namespace

std::vector<vertex_id>& graph::adj_of(vertex_id v, const char* op) {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument(std::string(op) + ": vertex " + vname(v) +
                                    " not present");
    return it->second;
}

const std::vector<vertex_id>& graph::adj_of(vertex_id v, const char* op) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument(std::string(op) + ": vertex " + vname(v) +
                                    " not present");
    return it->second;
}

void graph::add_vertex(vertex_id v) {
    if (v < 0)
        throw std::invalid_argument("add_vertex: negative id " + vname(v));
    if (adj_.count(v))
        throw std::invalid_argument("add_vertex: vertex " + vname(v) +
                                    " already present");
    adj_.emplace(v, std::vector<vertex_id>{});
    highest_id_ = std::max(highest_id_, v);
#ifndef NDEBUG
    validate();
#endif
}

void graph::remove_vertex(vertex_id v) {
    auto& nb = adj_of(v, "remove_vertex");
    if (!nb.empty())
        throw std::invalid_argument("remove_vertex: vertex " + vname(v) +
                                    " has degree " +
                                    std::to_string(nb.size()) + ", need 0");
    adj_.erase(v);
#ifndef NDEBUG
    validate();
#endif
}

void graph::add_edge(vertex_id i, vertex_id j) {
    if (i == j)
        throw std::invalid_argument("add_edge: self-loop " + vname(i) + "-" +
                                    vname(j));
    auto& ai = adj_of(i, "add_edge");
    auto& aj = adj_of(j, "add_edge");
    if (sorted_contains(ai, j))
        throw std::invalid_argument("add_edge: edge " + vname(i) + "-" +
                                    vname(j) + " already present");
    sorted_insert(ai, j);
    sorted_insert(aj, i);
    ++edge_count_;
#ifndef NDEBUG
    validate();
#endif
}

void graph::remove_edge(vertex_id i, vertex_id j) {
    if (i == j)
        throw std::invalid_argument("remove_edge: self-loop " + vname(i) +
                                    "-" + vname(j));
    auto& ai = adj_of(i, "remove_edge");
    auto& aj = adj_of(j, "remove_edge");
    if (!sorted_erase(ai, j))
        throw std::invalid_argument("remove_edge: edge " + vname(i) + "-" +
                                    vname(j) + " not present");
    sorted_erase(aj, i);
    --edge_count_;
#ifndef NDEBUG
    validate();
#endif
}

void graph::expand_edge(vertex_id i, vertex_id j, vertex_id v) {
    if (!has_edge(i, j))
        throw std::invalid_argument("expand_edge: edge " + vname(i) + "-" +
                                    vname(j) + " not present");
    const auto& av = adj_of(v, "expand_edge");
    if (!av.empty())
        throw std::invalid_argument("expand_edge: vertex " + vname(v) +
                                    " is not isolated");
    remove_edge(i, j);
    add_edge(i, v);
    add_edge(v, j);
}

void graph::contract_vertex(vertex_id v) {
    const auto& nb = adj_of(v, "contract_vertex");
    if (nb.size() != 2)
        throw std::invalid_argument("contract_vertex: vertex " + vname(v) +
                                    " has degree " +
                                    std::to_string(nb.size()) + ", need 2");
    vertex_id n1 = nb[0], n2 = nb[1];  // distinct: simple graph
    remove_edge(v, n1);
    remove_edge(v, n2);
    adj_.erase(v);
    if (!has_edge(n1, n2)) add_edge(n1, n2);
#ifndef NDEBUG
    validate();
#endif
}

bool graph::has_vertex(vertex_id v) const { return adj_.count(v) != 0; }

bool graph::has_edge(vertex_id i, vertex_id j) const {
    auto it = adj_.find(i);
    if (it == adj_.end()) return false;
    return sorted_contains(it->second, j);
}

int graph::degree(vertex_id v) const {
    return static_cast<int>(adj_of(v, "degree").size());
}

const std::vector<vertex_id>& graph::neighbors(vertex_id v) const {
    return adj_of(v, "neighbors");
}

std::vector<vertex_id> graph::vertices() const {
    std::vector<vertex_id> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<vertex_id, vertex_id>> graph::edges() const {
    std::vector<std::pair<vertex_id, vertex_id>> out;
    out.reserve(edge_count_);
    for (const auto& [v, nb] : adj_)
        for (vertex_id w : nb)
            if (v < w) out.emplace_back(v, w);
    return out;
}

void graph::validate() const {
    long long half_degrees = 0;
    for (const auto& [v, nb] : adj_) {
        vertex_id prev = -1;
        for (vertex_id w : nb) {
            if (w == v)
                throw std::logic_error("validate: self-loop at vertex " +
                                       vname(v));
            if (w <= prev)
                throw std::logic_error(
                    "validate: adjacency of vertex " + vname(v) +
                    " not strictly ascending (parallel edge?)");
            prev = w;
            auto it = adj_.find(w);
            if (it == adj_.end())
                throw std::logic_error("validate: adjacency of vertex " +
                                       vname(v) + " references dead vertex " +
                                       vname(w));
            if (!sorted_contains(it->second, v))
                throw std::logic_error("validate: edge " + vname(v) + "-" +
                                       vname(w) + " not symmetric");
        }
        if (v > highest_id_)
            throw std::logic_error("validate: vertex " + vname(v) +
                                   " above highest_id");
        half_degrees += static_cast<long long>(nb.size());
    }
    if (half_degrees != 2LL * edge_count_)
        throw std::logic_error("validate: edge_count " +
                               std::to_string(edge_count_) +
                               " does not match degree sum " +
                               std::to_string(half_degrees));
}

graph make_wheel(int k) {
    if (k < 3)
        throw std::invalid_argument("make_wheel: k must be >= 3, got " +
                                    std::to_string(k));
    graph g;
    for (vertex_id v = 0; v <= k; ++v) g.add_vertex(v);
    for (vertex_id v = 1; v <= k; ++v) g.add_edge(0, v);  // spokes
    for (vertex_id v = 1; v < k; ++v) g.add_edge(v, v + 1);
    g.add_edge(k, 1);  // close the rim
    return g;
}

}  // namespace wheels
