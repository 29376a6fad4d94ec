#include <doctest.h>

#include <algorithm>
#include <random>

#include "ebu/graph.hpp"

using namespace ebu;

TEST_CASE("basic generators follow the order conventions") {
    CHECK(path(3).order() == 3);
    CHECK(path(3).size() == 2);
    CHECK(star(4).order() == 5);
    CHECK(star(4).size() == 4);
    CHECK(matching(3).order() == 6);
    CHECK(matching(3).size() == 3);
    CHECK(cycle(5).size() == 5);
    CHECK(complete(5).size() == 10);
    CHECK(independent(7).size() == 0);
    CHECK(path(1).order() == 1);

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_basic(BasicKind::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(independent(0), std::invalid_argument);
}

TEST_CASE("matching is a disjoint union of edges") {
    Graph m = matching(3);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);
}

TEST_CASE("disjoint union and copies") {
    Graph two_paths = disjoint_union(path(2), path(2));
    CHECK(two_paths.order() == 4);
    CHECK(two_paths.size() == 2);

    Graph two_triangles = copies(2, complete(3));
    CHECK(two_triangles.order() == 6);
    CHECK(two_triangles.size() == 6);

    Graph i5 = disjoint_union(independent(3), independent(2));
    CHECK(i5 == independent(5));
}

TEST_CASE("join adds all cross edges") {
    Graph k23 = join(independent(2), independent(3));
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);

    Graph wheel = join(complete(1), cycle(4));
    CHECK(wheel.size() == 8);

    Graph k3 = join(complete(2), independent(1));
    CHECK(k3.size() == 3);
    CHECK(k3.order() == 3);
}

TEST_CASE("join edge count identity on random pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int na = 1 + static_cast<int>(rng() % 6), nb = 1 + static_cast<int>(rng() % 6);
        Graph a(na), b(nb);
        for (int u = 0; u < na; ++u)
            for (int v = u + 1; v < na; ++v)
                if (rng() % 2) a = a.with_edge(u, v);
        for (int u = 0; u < nb; ++u)
            for (int v = u + 1; v < nb; ++v)
                if (rng() % 2) b = b.with_edge(u, v);
        CHECK(join(a, b).size() == a.size() + b.size() + na * nb);
    }
}

TEST_CASE("turan graphs") {
    CHECK(turan_part_sizes(5, 2) == std::vector<int>{3, 2});
    CHECK(turan(5, 2).size() == 6);
    CHECK(turan(8, 2).size() == 16);
    CHECK(complete_multipartite({2, 2, 2}).size() == 12);
    CHECK_THROWS_AS(turan(5, 0), std::invalid_argument);

    // Part sizes differ by at most one, sum to n, and the edge count matches
    // direct counting.
    for (int n = 0; n <= 30; ++n)
        for (int p = 1; p <= 5; ++p) {
            auto sizes = turan_part_sizes(n, p);
            int total = 0, lo = n, hi = 0;
            for (int s : sizes) total += s, lo = std::min(lo, s), hi = std::max(hi, s);
            CHECK(total == n);
            if (!sizes.empty()) CHECK(hi - lo <= 1);
            CHECK(turan(n, p).size() == turan_edge_count(n, p));
        }
}

TEST_CASE("induced subgraph and components") {
    Graph g = disjoint_union(complete(3), path(2));
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(g.induced(comps[0]) == complete(3));
    CHECK(g.induced(comps[1]) == path(2));
    CHECK_FALSE(g.connected());
    CHECK(cycle(4).connected());
}

TEST_CASE("immutable edge editing") {
    Graph g = path(3);
    Graph h = g.with_edge(0, 2);
    CHECK(g.size() == 2);
    CHECK(h.size() == 3);
    CHECK(h.without_edge(0, 2) == g);
    CHECK_THROWS_AS(g.with_edge(1, 1), std::invalid_argument);
}

TEST_CASE("chromatic number on knowns") {
    CHECK(chromatic_number(independent(4)) == 1);
    CHECK(chromatic_number(path(5)) == 2);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(complete(6)) == 6);
    CHECK(chromatic_number(turan(9, 3)) == 3);
    CHECK(chromatic_number(Graph(0)) == 0);
}
