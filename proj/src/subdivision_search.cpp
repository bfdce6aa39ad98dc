#include "wheels/subdivision_search.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wheels/wheel_recognition.hpp"

namespace wheels {

namespace {

struct budget_tracker {
    long long remaining = -1;
    bool limited = false;

    explicit budget_tracker(long long b) : remaining(b), limited(b >= 0) {}

    // Returns false when the budget is exhausted.
    bool take() {
        if (!limited) return true;
        if (remaining == 0) return false;
        --remaining;
        return true;
    }
};

// Cheap conditions every is_k_wheel acceptance must satisfy. Contracting a
// degree-2 vertex never increases any degree, the vertex count, or the edge
// count, so the final hub needs a start vertex of degree >= k, the k+1
// surviving vertices need start degree >= 3, and a degree-0/1 vertex rules
// out 2-connectedness at this size. Failing any of these lets the search
// skip the full recognition pass at this node.
bool recognition_feasible(const graph& g, int k) {
    if (g.vertex_count() < k + 1) return false;
    if (g.edge_count() < 2 * k) return false;
    // Each contraction deletes exactly one vertex and one or two edges, so
    // reaching the k+1-vertex, 2k-edge wheel needs m - 2k <= 2(n - k - 1).
    if (g.edge_count() - 2 * k > 2 * (g.vertex_count() - k - 1)) return false;
    int deg3 = 0;
    bool hub = false;
    for (const auto& [v, nbrs] : g.adjacency()) {
        int d = static_cast<int>(nbrs.size());
        if (d < 2) return false;
        if (d >= 3) ++deg3;
        if (d >= k) hub = true;
    }
    return hub && deg3 >= k + 1;
}

// Conditions no further edge deletion can repair: degrees only fall and
// vertices only leave as they reach degree zero, so a subtree rooted at a
// graph without a possible hub, or without k+1 possible branch vertices,
// can never reach a recognized wheel.
bool branch_feasible(const graph& g, int k) {
    if (g.edge_count() <= 2 * k) return false;
    if (g.vertex_count() < k + 1) return false;
    int deg3 = 0;
    bool hub = false;
    for (const auto& [v, nbrs] : g.adjacency()) {
        int d = static_cast<int>(nbrs.size());
        if (d >= 3) ++deg3;
        if (d >= k) hub = true;
    }
    return hub && deg3 >= k + 1;
}

search_outcome search_rec(graph& work, int k, vertex_id c1, vertex_id c2,
                          budget_tracker& bt) {
    if (!bt.take()) return {search_status::budget_exhausted, std::nullopt};

    // Isolated vertices can never join a subdivision; drop them for this
    // subtree and restore on the way out.
    std::vector<vertex_id> dropped;
    for (const auto& [v, nbrs] : work.adjacency())
        if (nbrs.empty()) dropped.push_back(v);
    for (vertex_id v : dropped) work.remove_vertex(v);

    search_outcome out{search_status::not_found, std::nullopt};
    if (recognition_feasible(work, k)) {
        if (auto w = is_k_wheel(work, k)) {
            out = {search_status::found, std::move(w)};
        }
    }

    if (out.status == search_status::not_found && branch_feasible(work, k)) {
        // Branch on deleting one edge, in lexicographic order starting from
        // the cursor so no edge subset is visited twice.
        for (auto [a, b] : work.edges()) {
            if (a < c1 || (a == c1 && b < c2)) continue;
            work.remove_edge(a, b);
            search_outcome sub = search_rec(work, k, a, b, bt);
            work.add_edge(a, b);
            if (sub.status != search_status::not_found) {
                out = std::move(sub);
                break;
            }
        }
    }

    for (vertex_id v : dropped) work.add_vertex(v);
    return out;
}

// With an unlimited budget the top-level branches are independent, so they
// can run on worker threads. The sequential search returns the first find in
// branch order; claiming branches from an atomic counter and keeping the
// lowest-index find reproduces that exactly.
search_outcome parallel_top_level(const graph& g, int k, int jobs) {
    graph base = g;
    std::vector<vertex_id> dropped;
    for (const auto& [v, nbrs] : base.adjacency())
        if (nbrs.empty()) dropped.push_back(v);
    for (vertex_id v : dropped) base.remove_vertex(v);

    if (recognition_feasible(base, k)) {
        if (auto w = is_k_wheel(base, k))
            return {search_status::found, std::move(w)};
    }
    if (!branch_feasible(base, k))
        return {search_status::not_found, std::nullopt};

    const std::vector<std::pair<vertex_id, vertex_id>> branch_edges =
        base.edges();
    const int nb = static_cast<int>(branch_edges.size());
    std::atomic<int> next{0};
    std::atomic<int> best{nb};
    std::vector<std::optional<graph>> found(nb);
    std::mutex found_mu;

    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= nb) return;
            if (i > best.load()) continue;
            graph work = base;
            auto [a, b] = branch_edges[i];
            work.remove_edge(a, b);
            budget_tracker bt(-1);
            search_outcome sub = search_rec(work, k, a, b, bt);
            if (sub.status == search_status::found) {
                {
                    std::lock_guard<std::mutex> lk(found_mu);
                    found[i] = std::move(sub.witness);
                }
                int cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    std::vector<std::thread> pool;
    int nthreads = jobs < nb ? jobs : nb;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    int winner = best.load();
    if (winner < nb) return {search_status::found, std::move(found[winner])};
    return {search_status::not_found, std::nullopt};
}

}  // namespace

search_outcome find_k_wheel(const graph& g, int k, long long budget,
                            int jobs) {
    if (k < 3)
        throw std::invalid_argument("find_k_wheel: k must be >= 3, got " +
                                    std::to_string(k));
    if (jobs < 1)
        throw std::invalid_argument("find_k_wheel: jobs must be >= 1, got " +
                                    std::to_string(jobs));
    if (jobs > 1 && budget < 0 && g.edge_count() > 0)
        return parallel_top_level(g, k, jobs);
    graph work = g;
    budget_tracker bt(budget);
    return search_rec(work, k, 0, 0, bt);
}

}  // namespace wheels
