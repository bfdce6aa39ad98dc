#include "wheels/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace wheels {

namespace {

struct flat_graph {
    int n = 0;
    std::vector<std::vector<int>> adj;   // index-based adjacency lists
    std::vector<std::vector<char>> mat;  // adjacency matrix
    std::vector<int> deg;
    std::vector<std::vector<int>> nbr_degs;  // sorted neighbour degrees
};

flat_graph flatten(const graph& g) {
    flat_graph f;
    f.n = g.vertex_count();
    std::vector<vertex_id> ids;
    ids.reserve(f.n);
    for (const auto& [v, nb] : g.adjacency()) ids.push_back(v);
    auto index_of = [&](vertex_id v) {
        return static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    f.adj.resize(f.n);
    f.mat.assign(f.n, std::vector<char>(f.n, 0));
    f.deg.resize(f.n);
    int i = 0;
    for (const auto& [v, nb] : g.adjacency()) {
        f.deg[i] = static_cast<int>(nb.size());
        for (vertex_id w : nb) {
            int wi = index_of(w);
            f.adj[i].push_back(wi);
            f.mat[i][wi] = 1;
        }
        ++i;
    }
    f.nbr_degs.resize(f.n);
    for (int v = 0; v < f.n; ++v) {
        for (int w : f.adj[v]) f.nbr_degs[v].push_back(f.deg[w]);
        std::sort(f.nbr_degs[v].begin(), f.nbr_degs[v].end());
    }
    return f;
}

bool extend(const flat_graph& f1, const flat_graph& f2,
            const std::vector<int>& order, std::vector<int>& map_to,
            std::vector<char>& used, int pos) {
    if (pos == f1.n) return true;
    int v = order[pos];
    for (int w = 0; w < f2.n; ++w) {
        if (used[w]) continue;
        if (f1.deg[v] != f2.deg[w]) continue;
        if (f1.nbr_degs[v] != f2.nbr_degs[w]) continue;
        bool ok = true;
        for (int p = 0; p < pos; ++p) {
            int u = order[p];
            if (f1.mat[v][u] != f2.mat[w][map_to[u]]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map_to[v] = w;
        used[w] = 1;
        if (extend(f1, f2, order, map_to, used, pos + 1)) return true;
        used[w] = 0;
        map_to[v] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const graph& g1, const graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    flat_graph f1 = flatten(g1);
    flat_graph f2 = flatten(g2);

    std::vector<int> d1 = f1.deg, d2 = f2.deg;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
    std::vector<std::vector<int>> s1 = f1.nbr_degs, s2 = f2.nbr_degs;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    // Map high-degree vertices first; they are the most constrained.
    std::vector<int> order(f1.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (f1.deg[x] != f1.deg[y]) return f1.deg[x] > f1.deg[y];
        return x < y;
    });
    std::vector<int> map_to(f1.n, -1);
    std::vector<char> used(f2.n, 0);
    return extend(f1, f2, order, map_to, used, 0);
}

iso_class_summary iso_classes(const std::vector<graph>& list) {
    iso_class_summary out;
    out.total = static_cast<int>(list.size());
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        bool placed = false;
        for (iso_class& c : out.classes) {
            if (is_isomorphic(c.representative, list[i])) {
                c.member_indices.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({list[i], {i}});
    }
    return out;
}

}  // namespace wheels
