#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "wheels/graph.hpp"
#include "wheels/subdivision_search.hpp"
#include "wheels/wheel_recognition.hpp"

using wheels::find_k_wheel;
using wheels::graph;
using wheels::is_k_wheel;
using wheels::make_wheel;
using wheels::search_status;
using wheels::vertex_id;

namespace {

graph petersen() {
    // outer C_5, inner pentagram, spokes
    return testutil::from_edges({{0, 1},
                                 {1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {0, 4},
                                 {5, 7},
                                 {7, 9},
                                 {6, 9},
                                 {6, 8},
                                 {5, 8},
                                 {0, 5},
                                 {1, 6},
                                 {2, 7},
                                 {3, 8},
                                 {4, 9}});
}

}  // namespace

TEST_CASE("finds the wheel in itself and in subdivisions") {
    for (int k = 3; k <= 7; ++k) {
        auto out = find_k_wheel(make_wheel(k), k);
        REQUIRE(out.status == search_status::found);
        REQUIRE(out.witness.has_value());
        CHECK(*out.witness == make_wheel(k));
    }
    graph g = make_wheel(5);
    testutil::subdivide(g, 0, 1);
    testutil::subdivide(g, 3, 4);
    auto out = find_k_wheel(g, 5);
    REQUIRE(out.status == search_status::found);
    CHECK(*out.witness == make_wheel(5));
}

TEST_CASE("finds wheels hidden in supergraphs") {
    // complete graphs: K_{k+1} contains W_k
    for (int k = 3; k <= 5; ++k) {
        int n = k + 1;
        graph kn = testutil::graph_from_mask(
            n, (1ull << (n * (n - 1) / 2)) - 1);
        auto out = find_k_wheel(kn, k);
        REQUIRE(out.status == search_status::found);
        auto w = is_k_wheel(*out.witness, k);
        CHECK(w.has_value());
    }

    // wheel plus clutter: extra chords and a pendant vertex
    graph g = make_wheel(6);
    g.add_edge(1, 3);
    g.add_edge(2, 5);
    g.add_vertex(20);
    g.add_edge(0, 20);
    auto out = find_k_wheel(g, 6);
    REQUIRE(out.status == search_status::found);
    CHECK(is_k_wheel(*out.witness, 6).has_value());
}

TEST_CASE("not found when absent") {
    // removing any single edge from W_k destroys every W_k-subdivision
    for (int k = 4; k <= 6; ++k) {
        graph w = make_wheel(k);
        for (auto [a, b] : make_wheel(k).edges()) {
            graph g = w;
            g.remove_edge(a, b);
            CHECK(find_k_wheel(g, k).status == search_status::not_found);
        }
    }
    CHECK(find_k_wheel(make_wheel(3), 4).status == search_status::not_found);

    // K_6 has only 6 vertices: no W_6 (needs 7 branch vertices)
    graph k6 = testutil::graph_from_mask(6, (1ull << 15) - 1);
    CHECK(find_k_wheel(k6, 6).status == search_status::not_found);

    // Petersen graph is cubic: no vertex can serve as a W_4 hub
    CHECK(find_k_wheel(petersen(), 4).status == search_status::not_found);
    // but K_4 subdivisions abound in it
    auto p3 = find_k_wheel(petersen(), 3);
    REQUIRE(p3.status == search_status::found);
    CHECK(is_k_wheel(*p3.witness, 3).has_value());

    graph empty;
    CHECK(find_k_wheel(empty, 3).status == search_status::not_found);
}

TEST_CASE("witness vertices come from the input graph") {
    graph g = make_wheel(7);
    testutil::subdivide(g, 0, 2);
    g.add_edge(1, 4);
    auto out = find_k_wheel(g, 7);
    REQUIRE(out.status == search_status::found);
    for (vertex_id v : out.witness->vertices()) CHECK(g.has_vertex(v));
    CHECK(out.witness->vertex_count() == 8);
    CHECK(out.witness->edge_count() == 14);
}

TEST_CASE("budget semantics") {
    // budget 0 dies immediately
    CHECK(find_k_wheel(make_wheel(4), 4, 0).status ==
          search_status::budget_exhausted);
    // the root node is enough when the graph is already the wheel
    CHECK(find_k_wheel(make_wheel(4), 4, 1).status == search_status::found);

    // a graph needing real search: tiny budget exhausts, large succeeds
    graph g = testutil::graph_from_mask(6, (1ull << 15) - 1);  // K_6
    CHECK(find_k_wheel(g, 4, 1).status == search_status::budget_exhausted);
    auto full = find_k_wheel(g, 4);
    REQUIRE(full.status == search_status::found);
    // enough budget reproduces the unlimited result exactly
    auto big = find_k_wheel(g, 4, 1000000);
    REQUIRE(big.status == search_status::found);
    CHECK(*big.witness == *full.witness);

    // not_found is only reported when the search truly completed
    graph c5 = testutil::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(find_k_wheel(c5, 4, 1).status == search_status::not_found);
}

TEST_CASE("budget exhaustion is monotone in the budget") {
    graph g = make_wheel(5);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    long long needed = -1;
    for (long long b = 0; b < 100000; b = b == 0 ? 1 : b * 2) {
        auto out = find_k_wheel(g, 5, b);
        if (out.status != search_status::budget_exhausted) {
            needed = b;
            break;
        }
    }
    REQUIRE(needed >= 0);
    CHECK(find_k_wheel(g, 5, needed).status == search_status::found);
    if (needed > 0)
        CHECK(find_k_wheel(g, 5, needed / 2).status ==
              search_status::budget_exhausted);
}

TEST_CASE("parallel search matches sequential exactly") {
    std::mt19937 rng(7777);
    int found_cnt = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        int maxm = std::min(14, n * (n - 1) / 2);
        graph g = testutil::random_graph(rng, n, 5 + static_cast<int>(rng() % (maxm - 4)));
        int k = 3 + static_cast<int>(rng() % 3);
        auto seq = find_k_wheel(g, k, -1, 1);
        auto par = find_k_wheel(g, k, -1, 4);
        REQUIRE(seq.status == par.status);
        if (seq.status == search_status::found) {
            ++found_cnt;
            CHECK(*seq.witness == *par.witness);
        }
    }
    CHECK(found_cnt > 0);  // the corpus must exercise the found path
}

TEST_CASE("status agrees with the brute-force oracle on random graphs") {
    std::mt19937 rng(13579);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);  // 5..8
        int maxm = std::min(14, n * (n - 1) / 2);
        graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % (maxm + 1)));
        int k = 4 + static_cast<int>(rng() % 2);
        bool got = find_k_wheel(g, k).status == search_status::found;
        bool want = testutil::oracle_has_wheel_subdivision(g, k);
        if (got != want) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(trial);
        }
        REQUIRE(got == want);
        (got ? yes : no)++;
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("input graph is never mutated by the search") {
    graph g = make_wheel(6);
    g.add_edge(1, 4);
    graph before = g;
    (void)find_k_wheel(g, 6);
    (void)find_k_wheel(g, 7);
    (void)find_k_wheel(g, 4, 3);
    (void)find_k_wheel(g, 5, -1, 3);
    CHECK(g == before);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(find_k_wheel(make_wheel(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(find_k_wheel(make_wheel(3), 3, -1, 0),
                    std::invalid_argument);
}
