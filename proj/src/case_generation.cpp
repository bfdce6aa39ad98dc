#include "wheels/case_generation.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wheels/connectivity.hpp"
#include "wheels/subdivision_search.hpp"

namespace wheels {

namespace {

enum class verdict { contains, exception, skipped, aborted };

struct adjudication {
    verdict v = verdict::contains;
    std::optional<graph> emitted;
};

// Decide one candidate: a candidate with no W_k-subdivision is an
// exception. wheelproof additionally demands 3-connectivity and counts the
// candidates that fail it as skipped instead.
adjudication adjudicate(const graph& work, int k, long long budget,
                        bool require_3conn) {
    search_outcome so = find_k_wheel(work, k, budget, 1);
    if (so.status == search_status::budget_exhausted)
        return {verdict::aborted, std::nullopt};
    if (so.status == search_status::found)
        return {verdict::contains, std::nullopt};
    if (require_3conn && !is_3connected(work))
        return {verdict::skipped, std::nullopt};
    return {verdict::exception, work};
}

struct run_totals {
    std::vector<graph> graphs;
    long long tested = 0;
    long long skipped = 0;
    bool aborted = false;
};

// Adjudicate candidates 0..n-1 in order. Sequentially this mutates one
// working copy in place and undoes each candidate; in parallel each worker
// materializes its candidate on a fresh copy of the base instead. Both paths
// produce identical graphs in identical order, and a per-candidate budget
// exhaustion stops counting at the same candidate either way.
run_totals run_candidates(const graph& base, int n, int k, int jobs,
                          long long budget, bool require_3conn,
                          const std::function<void(graph&, int)>& apply,
                          const std::function<void(graph&, int)>& undo,
                          const char* who) {
    run_totals rt;
    if (jobs <= 1 || n <= 1) {
        graph work = base;
        for (int i = 0; i < n; ++i) {
            apply(work, i);
            adjudication adj = adjudicate(work, k, budget, require_3conn);
            undo(work, i);
            if (adj.v == verdict::aborted) {
                rt.aborted = true;
                break;
            }
            ++rt.tested;
            if (adj.v == verdict::exception)
                rt.graphs.push_back(std::move(*adj.emitted));
            else if (adj.v == verdict::skipped)
                ++rt.skipped;
        }
        if (!(work == base))
            throw std::logic_error(std::string(who) +
                                   ": working graph not restored");
        return rt;
    }

    std::vector<adjudication> slots(n);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            graph cand = base;
            apply(cand, i);
            slots[i] = adjudicate(cand, k, budget, require_3conn);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = jobs < n ? jobs : n;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (int i = 0; i < n; ++i) {
        if (slots[i].v == verdict::aborted) {
            rt.aborted = true;
            break;
        }
        ++rt.tested;
        if (slots[i].v == verdict::exception)
            rt.graphs.push_back(std::move(*slots[i].emitted));
        else if (slots[i].v == verdict::skipped)
            ++rt.skipped;
    }
    return rt;
}

struct eg_candidate {
    int config = 0;
    vertex_id i = -1, j = -1, x = -1, y = -1, z = -1;
};

void check_regions(const graph& g, const vertex_set& a, const vertex_set& b,
                   const char* who) {
    auto check_one = [&](const vertex_set& s, const char* name) {
        if (s.empty())
            throw std::invalid_argument(std::string(who) + ": attachment set " +
                                        name + " is empty");
        vertex_set sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument(std::string(who) + ": attachment set " +
                                        name + " has a duplicate vertex");
        for (vertex_id v : s)
            if (!g.has_vertex(v))
                throw std::invalid_argument(std::string(who) + ": vertex " +
                                            std::to_string(v) + " in set " +
                                            name + " is not in the graph");
    };
    check_one(a, "A");
    check_one(b, "B");
    for (vertex_id v : a)
        if (std::find(b.begin(), b.end(), v) != b.end())
            throw std::invalid_argument(std::string(who) + ": vertex " +
                                        std::to_string(v) +
                                        " appears in both attachment sets");
}

// All neighbourhood snapshots the construction consults are unchanged from
// the input graph (each candidate is fully undone before the next), so the
// whole candidate list can be read off the pristine graph up front.
std::vector<eg_candidate> enumerate_candidates(const graph& g,
                                               const vertex_set& a,
                                               const vertex_set& b,
                                               skip_mode mode) {
    std::vector<eg_candidate> out;
    for (std::size_t ai = 0; ai < a.size(); ++ai) {
        vertex_id i = a[ai];
        for (std::size_t bj = 0; bj < b.size(); ++bj) {
            vertex_id j = b[bj];
            auto skip_a = [&](vertex_id v) {
                if (mode == skip_mode::literal)
                    return ai > 0 && v == a[ai - 1];
                return std::find(a.begin(), a.begin() + ai, v) !=
                       a.begin() + ai;
            };
            auto skip_b = [&](vertex_id v) {
                if (mode == skip_mode::literal)
                    return bj > 0 && v == b[bj - 1];
                return std::find(b.begin(), b.begin() + bj, v) !=
                       b.begin() + bj;
            };
            // Configuration 1: a direct edge between the two attachment
            // vertices, when it does not already exist.
            if (!g.has_edge(i, j))
                out.push_back({1, i, j, -1, -1, -1});
            // Configuration 2: a new vertex on an edge at i, joined to j.
            for (vertex_id x : g.neighbors(i)) {
                if (x == j || skip_a(x)) continue;
                out.push_back({2, i, j, x, -1, -1});
            }
            // Configuration 3: a new vertex on an edge at j, joined to i;
            // configuration 4 replaces that join with a second new vertex
            // on an edge at i.
            for (vertex_id y : g.neighbors(j)) {
                if (y == i || skip_b(y)) continue;
                out.push_back({3, i, j, -1, y, -1});
                for (vertex_id z : g.neighbors(i)) {
                    if (skip_a(z)) continue;
                    out.push_back({4, i, j, -1, y, z});
                }
            }
        }
    }
    return out;
}

void eg_apply(graph& w, const eg_candidate& c, vertex_id v1, vertex_id v2) {
    switch (c.config) {
        case 1:
            w.add_edge(c.i, c.j);
            break;
        case 2:
            w.add_vertex(v1);
            w.expand_edge(c.i, c.x, v1);
            w.add_edge(v1, c.j);
            break;
        case 3:
            w.add_vertex(v1);
            w.expand_edge(c.j, c.y, v1);
            w.add_edge(v1, c.i);
            break;
        case 4:
            w.add_vertex(v1);
            w.expand_edge(c.j, c.y, v1);
            w.add_vertex(v2);
            w.expand_edge(c.i, c.z, v2);
            w.add_edge(v1, v2);
            break;
        default:
            throw std::logic_error("exception_generator: bad configuration");
    }
}

void eg_undo(graph& w, const eg_candidate& c, vertex_id v1, vertex_id v2) {
    switch (c.config) {
        case 1:
            w.remove_edge(c.i, c.j);
            break;
        case 2:
            w.remove_edge(v1, c.j);
            w.contract_vertex(v1);
            break;
        case 3:
            w.remove_edge(v1, c.i);
            w.contract_vertex(v1);
            break;
        case 4:
            w.remove_edge(v1, v2);
            w.contract_vertex(v2);
            w.contract_vertex(v1);
            break;
        default:
            throw std::logic_error("exception_generator: bad configuration");
    }
}

}  // namespace

exception_list wheelproof(int k, int jobs, long long budget) {
    if (k < 4)
        throw std::invalid_argument("wheelproof: k must be >= 4, got " +
                                    std::to_string(k));
    if (jobs < 1)
        throw std::invalid_argument("wheelproof: jobs must be >= 1, got " +
                                    std::to_string(jobs));

    // Base: a (k-1)-wheel plus a new vertex u joined to the hub. Candidates
    // give u two further attachments, each at an existing rim vertex or at a
    // new vertex subdividing an existing edge.
    graph base = make_wheel(k - 1);
    const vertex_id u = k;
    base.add_vertex(u);
    base.add_edge(0, u);

    std::vector<attachment_spec> atts;
    for (vertex_id v = 1; v <= k - 1; ++v)
        atts.push_back({attachment_spec::kind_t::existing_vertex, v, -1});
    for (auto [x, y] : base.edges())
        if (x != u && y != u)
            atts.push_back({attachment_spec::kind_t::new_vertex_on_edge, x, y});

    // Unordered pairs of attachments; the same existing vertex twice would
    // be a parallel edge, so only those repeats are dropped. The same edge
    // twice is allowed: the second point lands beside the first.
    std::vector<std::pair<int, int>> pairs;
    const int na = static_cast<int>(atts.size());
    for (int i1 = 0; i1 < na; ++i1)
        for (int i2 = i1; i2 < na; ++i2) {
            if (i1 == i2 &&
                atts[i1].kind == attachment_spec::kind_t::existing_vertex)
                continue;
            pairs.emplace_back(i1, i2);
        }

    const vertex_id u1 = base.highest_id() + 1;
    const vertex_id u2 = u1 + 1;

    auto apply = [&, u1, u2](graph& w, int p) {
        auto [i1, i2] = pairs[p];
        const attachment_spec& a1 = atts[i1];
        const attachment_spec& a2 = atts[i2];
        if (a1.kind == attachment_spec::kind_t::existing_vertex) {
            w.add_edge(u, a1.anchor);
        } else {
            w.add_vertex(u1);
            w.expand_edge(a1.anchor, a1.edge_other, u1);
            w.add_edge(u, u1);
        }
        if (a2.kind == attachment_spec::kind_t::existing_vertex) {
            w.add_edge(u, a2.anchor);
        } else if (i1 == i2) {
            w.add_vertex(u2);
            w.expand_edge(u1, a1.edge_other, u2);
            w.add_edge(u, u2);
        } else {
            w.add_vertex(u2);
            w.expand_edge(a2.anchor, a2.edge_other, u2);
            w.add_edge(u, u2);
        }
    };
    auto undo = [&, u1, u2](graph& w, int p) {
        auto [i1, i2] = pairs[p];
        const attachment_spec& a1 = atts[i1];
        const attachment_spec& a2 = atts[i2];
        if (a2.kind == attachment_spec::kind_t::existing_vertex) {
            w.remove_edge(u, a2.anchor);
        } else {
            w.remove_edge(u, u2);
            w.contract_vertex(u2);
        }
        if (a1.kind == attachment_spec::kind_t::existing_vertex) {
            w.remove_edge(u, a1.anchor);
        } else {
            w.remove_edge(u, u1);
            w.contract_vertex(u1);
        }
    };

    run_totals rt =
        run_candidates(base, static_cast<int>(pairs.size()), k, jobs, budget,
                       /*require_3conn=*/true, apply, undo, "wheelproof");
    exception_list out;
    out.k = k;
    out.graphs = std::move(rt.graphs);
    out.candidates_tested = rt.tested;
    out.skipped_not_3connected = rt.skipped;
    out.budget_exhausted = rt.aborted;
    return out;
}

exception_list exception_generator(const graph& g, const vertex_set& a,
                                   const vertex_set& b, int k, skip_mode mode,
                                   int jobs, long long budget) {
    if (k < 3)
        throw std::invalid_argument(
            "exception_generator: k must be >= 3, got " + std::to_string(k));
    if (jobs < 1)
        throw std::invalid_argument(
            "exception_generator: jobs must be >= 1, got " +
            std::to_string(jobs));
    check_regions(g, a, b, "exception_generator");

    const vertex_id v1 = g.highest_id() + 1;
    const vertex_id v2 = v1 + 1;
    std::vector<eg_candidate> cands = enumerate_candidates(g, a, b, mode);

    auto apply = [&, v1, v2](graph& w, int i) { eg_apply(w, cands[i], v1, v2); };
    auto undo = [&, v1, v2](graph& w, int i) { eg_undo(w, cands[i], v1, v2); };

    run_totals rt = run_candidates(g, static_cast<int>(cands.size()), k, jobs,
                                   budget, /*require_3conn=*/false, apply,
                                   undo, "exception_generator");
    exception_list out;
    out.k = k;
    out.graphs = std::move(rt.graphs);
    out.candidates_tested = rt.tested;
    out.skipped_not_3connected = rt.skipped;
    out.budget_exhausted = rt.aborted;
    return out;
}

long long candidate_count(const graph& g, const vertex_set& a,
                          const vertex_set& b, skip_mode mode) {
    check_regions(g, a, b, "candidate_count");
    return static_cast<long long>(enumerate_candidates(g, a, b, mode).size());
}

}  // namespace wheels
