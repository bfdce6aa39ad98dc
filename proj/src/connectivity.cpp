#include "wheels/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace wheels {

namespace {

// Sorted live-vertex list plus binary-search id lookup; throws
// std::logic_error on adjacency entries that name dead vertices.
struct index_map {
    std::vector<vertex_id> ids;

    explicit index_map(const graph& g) {
        ids.reserve(g.vertex_count());
        for (const auto& [v, nb] : g.adjacency()) ids.push_back(v);
    }

    int size() const { return static_cast<int>(ids.size()); }

    int at(vertex_id v, const char* who) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it == ids.end() || *it != v)
            throw std::logic_error(std::string(who) +
                                   ": adjacency references dead vertex " +
                                   std::to_string(v));
        return static_cast<int>(it - ids.begin());
    }
};

void check_vertex_set(const graph& g, const vertex_set& s, const char* who) {
    std::set<vertex_id> seen;
    for (vertex_id v : s) {
        if (!g.has_vertex(v))
            throw std::invalid_argument(std::string(who) + ": vertex " +
                                        std::to_string(v) + " not present");
        if (!seen.insert(v).second)
            throw std::invalid_argument(std::string(who) +
                                        ": duplicate vertex " +
                                        std::to_string(v));
    }
}

}  // namespace

bool is_2connected(const graph& g) {
    index_map idx(g);
    const int n = idx.size();
    if (n == 0)
        throw std::invalid_argument("is_2connected: graph has no vertices");

    // Validate all adjacency references up front so corruption is reported
    // even in unreachable parts of the graph.
    std::vector<std::vector<int>> adj(n);
    {
        int i = 0;
        for (const auto& [v, nb] : g.adjacency()) {
            adj[i].reserve(nb.size());
            for (vertex_id w : nb)
                adj[i].push_back(idx.at(w, "is_2connected"));
            ++i;
        }
    }
    if (n == 1) return true;

    std::vector<int> dfn(n, 0), low(n, 0), parent(n, -1);
    struct frame {
        int v;
        size_t ei;
    };
    std::vector<frame> stack;
    int counter = 0;
    int root_children = 0;
    bool has_cut = false;

    dfn[0] = ++counter;
    low[0] = dfn[0];
    stack.push_back({0, 0});
    while (!stack.empty()) {
        frame& f = stack.back();
        if (f.ei < adj[f.v].size()) {
            int w = adj[f.v][f.ei++];
            if (dfn[w] == 0) {
                parent[w] = f.v;
                if (f.v == 0) ++root_children;
                dfn[w] = ++counter;
                low[w] = dfn[w];
                stack.push_back({w, 0});
            } else if (w != parent[f.v]) {
                low[f.v] = std::min(low[f.v], dfn[w]);
            }
        } else {
            int child = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[p] = std::min(low[p], low[child]);
                // Non-root p is a cut vertex when no back edge from child's
                // subtree climbs above p; the root is one iff it has two or
                // more DFS children.
                if (p != 0 && low[child] >= dfn[p]) has_cut = true;
            }
        }
    }
    if (counter < n) return false;  // disconnected
    if (root_children >= 2) return false;
    return !has_cut;
}

bool is_3connected(const graph& g) {
    if (g.vertex_count() < 4) return false;
    for (vertex_id v : g.vertices()) {
        graph h = g;
        for (vertex_id w : std::vector<vertex_id>(h.neighbors(v)))
            h.remove_edge(v, w);
        h.remove_vertex(v);
        if (!is_2connected(h)) return false;
    }
    return true;
}

std::vector<vertex_set> components_minus(const graph& g, const vertex_set& s) {
    check_vertex_set(g, s, "components_minus");
    std::set<vertex_id> removed(s.begin(), s.end());

    std::vector<vertex_set> out;
    std::set<vertex_id> seen;
    for (const auto& [start, nb0] : g.adjacency()) {
        if (removed.count(start) || seen.count(start)) continue;
        // start is the smallest unvisited vertex, hence the smallest of its
        // component; components therefore come out ordered by smallest
        // member.
        vertex_set comp;
        std::queue<vertex_id> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            vertex_id v = q.front();
            q.pop();
            comp.push_back(v);
            for (vertex_id w : g.neighbors(v)) {
                if (removed.count(w) || seen.count(w)) continue;
                seen.insert(w);
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// All maximal cliques of the symmetric relation rel (n x n, no loops),
// Bron-Kerbosch without pivoting; candidates scanned ascending so the
// traversal is deterministic. Singleton cliques (isolated vertices of the
// relation) are included.
void bron_kerbosch(const std::vector<std::vector<bool>>& rel,
                   std::vector<int>& r, std::vector<int>& p,
                   std::vector<int>& x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::vector<int> p_copy = p;
    for (int v : p_copy) {
        std::vector<int> np, nx;
        for (int w : p)
            if (rel[v][w]) np.push_back(w);
        for (int w : x)
            if (rel[v][w]) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(rel, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<vertex_set> bridges(const graph& g, const vertex_set& w) {
    check_vertex_set(g, w, "bridges");
    index_map idx(g);
    const int n = idx.size();
    if (n == 0) return {};

    std::vector<bool> in_w(n, false);
    for (vertex_id v : w) in_w[idx.at(v, "bridges")] = true;

    // rel[u][v]: some path u..v has all internal vertices outside w. BFS
    // from u through non-w vertices; every vertex merely touched is related.
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
        std::vector<bool> touched(n, false);
        std::queue<int> q;
        for (vertex_id wid : g.neighbors(idx.ids[u])) {
            int v = idx.at(wid, "bridges");
            if (!touched[v]) {
                touched[v] = true;
                if (!in_w[v]) q.push(v);
            }
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (vertex_id wid : g.neighbors(idx.ids[v])) {
                int t = idx.at(wid, "bridges");
                if (t == u || touched[t]) continue;
                touched[t] = true;
                if (!in_w[t]) q.push(t);
            }
        }
        for (int v = 0; v < n; ++v)
            if (touched[v] && v != u) rel[u][v] = rel[v][u] = true;
    }

    std::vector<std::vector<int>> cliques;
    std::vector<int> r, p, x;
    for (int v = 0; v < n; ++v) p.push_back(v);
    bron_kerbosch(rel, r, p, x, cliques);

    std::vector<vertex_set> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) {
        vertex_set ids;
        ids.reserve(c.size());
        for (int v : c) ids.push_back(idx.ids[v]);
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wheels
