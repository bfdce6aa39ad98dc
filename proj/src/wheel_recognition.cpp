#include "wheels/wheel_recognition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheels/connectivity.hpp"

namespace wheels {

std::optional<graph> is_k_wheel(const graph& g, int k) {
    if (k < 3)
        throw std::invalid_argument("is_k_wheel: k must be >= 3, got " +
                                    std::to_string(k));
    if (g.vertex_count() == 0) return std::nullopt;
    if (!is_2connected(g)) return std::nullopt;

    // Contract on compact index-based adjacency; the input is not touched
    // and a graph is only materialized for an accepted witness.
    const int n = g.vertex_count();
    std::vector<vertex_id> ids;
    ids.reserve(n);
    for (const auto& [v, nb] : g.adjacency()) ids.push_back(v);
    auto index_of = [&](vertex_id v) {
        return static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<std::vector<int>> adj(n);
    {
        int i = 0;
        for (const auto& [v, nb] : g.adjacency()) {
            adj[i].reserve(nb.size());
            for (vertex_id w : nb) adj[i].push_back(index_of(w));
            ++i;
        }
    }
    std::vector<bool> alive(n, true);
    int alive_count = n;

    auto drop_from = [&](std::vector<int>& lst, int v) {
        lst.erase(std::find(lst.begin(), lst.end(), v));
    };

    // Contract every degree-2 vertex to a fixed point. A contraction can
    // lower a neighbour's degree when the two ends were already adjacent,
    // so keep sweeping until a pass changes nothing. Each productive pass
    // deletes at least one vertex, bounding the pass count by |V|.
    const int max_passes = n + 2;
    int passes = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || adj[v].size() != 2) continue;
            int a = adj[v][0], b = adj[v][1];
            drop_from(adj[a], v);
            drop_from(adj[b], v);
            adj[v].clear();
            alive[v] = false;
            --alive_count;
            if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            changed = true;
        }
        if (++passes > max_passes)
            throw std::logic_error(
                "is_k_wheel: contraction failed to reach a fixed point");
    }

    if (alive_count != k + 1) return std::nullopt;
    int deg3 = 0, degk = 0;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        int d = static_cast<int>(adj[v].size());
        if (d == 3) ++deg3;
        if (d == k) ++degk;
    }
    // W_3 = K_4 has four degree-3 vertices and no distinguished hub.
    bool matches = (k == 3) ? (deg3 == 4) : (deg3 == k && degk == 1);
    if (!matches) return std::nullopt;

    graph wheel;
    for (int v = 0; v < n; ++v)
        if (alive[v]) wheel.add_vertex(ids[v]);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int w : adj[v])
            if (ids[v] < ids[w]) wheel.add_edge(ids[v], ids[w]);
    }
    return wheel;
}

}  // namespace wheels
