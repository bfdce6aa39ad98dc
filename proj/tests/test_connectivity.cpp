#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wheels/connectivity.hpp"
#include "wheels/graph.hpp"

using wheels::bridges;
using wheels::components_minus;
using wheels::graph;
using wheels::is_2connected;
using wheels::is_3connected;
using wheels::make_wheel;
using wheels::vertex_id;
using wheels::vertex_set;

namespace {

// Independent 3-connectivity check: >= 4 vertices, connected, and no cut
// set of size <= 2 (brute force over vertices and pairs).
bool oracle_3connected(const graph& g) {
    std::vector<vertex_id> ids = g.vertices();
    int n = static_cast<int>(ids.size());
    if (n < 4) return false;
    auto idx = [&](vertex_id v) {
        return static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::array<std::uint32_t, 16> rows{};
    for (auto [u, v] : g.edges()) {
        rows[idx(u)] |= 1u << idx(v);
        rows[idx(v)] |= 1u << idx(u);
    }
    std::uint32_t full = (1u << n) - 1;
    if (!testutil::detail::mask_connected(rows, full)) return false;
    for (int a = 0; a < n; ++a) {
        if (!testutil::detail::mask_connected(rows, full & ~(1u << a)))
            return false;
        for (int b = a + 1; b < n; ++b)
            if (!testutil::detail::mask_connected(
                    rows, full & ~(1u << a) & ~(1u << b)))
                return false;
    }
    return true;
}

graph cycle(int n) {
    graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int v = 0; v < n; ++v) g.add_edge(std::min(v, (v + 1) % n),
                                           std::max(v, (v + 1) % n));
    return g;
}

}  // namespace

TEST_CASE("is_2connected small cases") {
    CHECK(is_2connected(testutil::from_edges({{0, 1}})));  // single edge
    graph one;
    one.add_vertex(5);
    CHECK(is_2connected(one));  // single vertex

    graph empty;
    CHECK_THROWS_AS(is_2connected(empty), std::invalid_argument);

    CHECK(is_2connected(testutil::from_edges({{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_2connected(testutil::from_edges({{0, 1}, {1, 2}})));  // path
    CHECK(is_2connected(cycle(6)));
    CHECK(is_2connected(make_wheel(6)));

    // bowtie: two triangles sharing vertex 2
    graph bowtie = testutil::from_edges(
        {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(is_2connected(bowtie));

    // disconnected, including by an isolated vertex
    graph dis = testutil::from_edges({{0, 1}, {2, 3}});
    CHECK_FALSE(is_2connected(dis));
    graph iso = testutil::from_edges({{0, 1}, {0, 2}, {1, 2}});
    iso.add_vertex(9);
    CHECK_FALSE(is_2connected(iso));
}

TEST_CASE("is_2connected matches the brute-force oracle exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            graph g = testutil::graph_from_mask(n, mask);
            bool got = is_2connected(g);
            bool want = testutil::oracle_2connected(g);
            if (got != want) {
                CAPTURE(n);
                CAPTURE(mask);
                REQUIRE(got == want);
            }
        }
    }
}

TEST_CASE("is_2connected matches the oracle on random graphs to n=8") {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 1500; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        int maxm = n * (n - 1) / 2;
        graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % (maxm + 1)));
        CHECK(is_2connected(g) == testutil::oracle_2connected(g));
    }
}

TEST_CASE("is_3connected basics and oracle agreement") {
    CHECK(is_3connected(make_wheel(3)));
    CHECK(is_3connected(make_wheel(7)));
    CHECK_FALSE(is_3connected(cycle(5)));
    CHECK_FALSE(is_3connected(testutil::from_edges({{0, 1}, {1, 2}, {0, 2}})));
    // wheel with one subdivided spoke: the new degree-2 vertex kills it
    graph w = make_wheel(5);
    testutil::subdivide(w, 0, 3);
    CHECK_FALSE(is_3connected(w));

    for (int n = 4; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            graph g = testutil::graph_from_mask(n, mask);
            CHECK(is_3connected(g) == oracle_3connected(g));
        }
    }
    std::mt19937 rng(555);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        int maxm = n * (n - 1) / 2;
        graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % (maxm + 1)));
        CHECK(is_3connected(g) == oracle_3connected(g));
    }
}

TEST_CASE("components_minus") {
    graph c6 = cycle(6);
    auto comps = components_minus(c6, {0, 3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == vertex_set{1, 2});
    CHECK(comps[1] == vertex_set{4, 5});

    auto whole = components_minus(c6, {});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == vertex_set{0, 1, 2, 3, 4, 5});

    // removing everything leaves no components
    CHECK(components_minus(c6, {0, 1, 2, 3, 4, 5}).empty());

    // components ordered by smallest member, each ascending
    graph g = testutil::from_edges({{0, 9}, {1, 2}, {5, 7}, {5, 8}});
    auto cs = components_minus(g, {9});
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == vertex_set{0});
    CHECK(cs[1] == vertex_set{1, 2});
    CHECK(cs[2] == vertex_set{5, 7, 8});

    CHECK_THROWS_AS(components_minus(c6, {99}), std::invalid_argument);
    CHECK_THROWS_AS(components_minus(c6, {0, 0}), std::invalid_argument);
}

TEST_CASE("bridges") {
    graph c6 = cycle(6);
    auto bs = bridges(c6, {0, 3});
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == vertex_set{0, 1, 2, 3});
    CHECK(bs[1] == vertex_set{0, 3, 4, 5});

    // empty w degenerates to connected components
    graph two = testutil::from_edges({{0, 1}, {1, 2}, {4, 5}});
    auto cs = bridges(two, {});
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == vertex_set{0, 1, 2});
    CHECK(cs[1] == vertex_set{4, 5});

    // every vertex in w: paths may not use interior vertices at all, so the
    // relation collapses to adjacency and K_4 is one bridge
    auto k4 = bridges(make_wheel(3), {0, 1, 2, 3});
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == vertex_set{0, 1, 2, 3});

    // wheel minus hub view: rim vertices relate through the rim only
    graph w5 = make_wheel(5);
    auto rim = bridges(w5, {0});
    REQUIRE(rim.size() == 1);
    CHECK(rim[0] == vertex_set{0, 1, 2, 3, 4, 5});

    // separator splitting the rim: two bridges through the two arcs, plus
    // every vertex still reaches the others through the hub... the hub is
    // not in w, so everything is one bridge again
    auto all = bridges(w5, {1, 3});
    REQUIRE(all.size() == 1);

    // w = {hub, two opposite rim vertices} on W_6 splits the rim arcs
    graph w6 = make_wheel(6);
    auto arcs = bridges(w6, {0, 1, 4});
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == vertex_set{0, 1, 2, 3, 4});
    CHECK(arcs[1] == vertex_set{0, 1, 4, 5, 6});

    CHECK_THROWS_AS(bridges(c6, {42}), std::invalid_argument);
    CHECK_THROWS_AS(bridges(c6, {1, 1}), std::invalid_argument);
}

TEST_CASE("is_2connected rejects adjacency entries naming dead vertices") {
    // corruption in a part of the graph the DFS would never even reach
    graph g = testutil::from_edges({{0, 1}, {1, 2}, {0, 2}, {5, 6}});
    wheels::graph_test_access::adj(g)[5].push_back(99);
    wheels::graph_test_access::adj(g)[6].push_back(99);
    CHECK_THROWS_AS(is_2connected(g), std::logic_error);
}

TEST_CASE("bridges: singleton bridge for a vertex cut off by w") {
    // star: centre 0 in w isolates each leaf into its own singleton bridge
    graph star = testutil::from_edges({{0, 1}, {0, 2}, {0, 3}});
    auto bs = bridges(star, {0});
    REQUIRE(bs.size() == 3);
    CHECK(bs[0] == vertex_set{0, 1});
    CHECK(bs[1] == vertex_set{0, 2});
    CHECK(bs[2] == vertex_set{0, 3});
}
