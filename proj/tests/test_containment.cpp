#include <doctest.h>

#include <random>

#include "ebu/blowup.hpp"
#include "ebu/containment.hpp"

using namespace ebu;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double prob = 0.5) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < prob) g = g.with_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("subgraph containment basics") {
    CHECK(subgraph_contains(complete(3), path(3)).outcome == Outcome::found);
    CHECK(subgraph_contains(complete(3), cycle(4)).outcome == Outcome::absent);
    CHECK(subgraph_contains(cycle(6), path(6)).outcome == Outcome::found);
    CHECK(subgraph_contains(cycle(6), complete(3)).outcome == Outcome::absent);
    CHECK(subgraph_contains(turan(9, 3), complete(3)).outcome == Outcome::found);
    CHECK(subgraph_contains(turan(9, 3), complete(4)).outcome == Outcome::absent);
    // Disconnected pattern.
    CHECK(subgraph_contains(cycle(7), disjoint_union(path(3), path(3))).outcome == Outcome::found);
    CHECK(subgraph_contains(path(5), disjoint_union(path(3), path(3))).outcome == Outcome::absent);
    // Non-induced semantics: C_4 sits inside K_4.
    CHECK(subgraph_contains(complete(4), cycle(4)).outcome == Outcome::found);
}

TEST_CASE("embeddings are returned and verify") {
    Graph host = realize(ConstructionSpec::h(12, 2, 3));
    auto result = subgraph_contains(host, lollipop(3, 2));
    REQUIRE(result.outcome == Outcome::found);
    REQUIRE(result.embedding.has_value());
    CHECK(verify_embedding(host, lollipop(3, 2), *result.embedding));
}

TEST_CASE("budget exhaustion reports undecided") {
    std::mt19937_64 rng(3);
    Graph host = random_graph(14, rng);
    SearchLimits tiny{1};
    auto result = subgraph_contains(host, blowup(lollipop(3, 2), 2).graph, tiny);
    CHECK(result.outcome == Outcome::undecided);
}

TEST_CASE("subgraph containment against brute force on random pairs") {
    // Oracle: try all injections of a 4-vertex pattern into small hosts.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        Graph host = random_graph(6, rng, 0.45);
        Graph pattern = random_graph(4, rng, 0.5);
        bool expected = false;
        std::vector<int> sel(4);
        for (sel[0] = 0; sel[0] < 6; ++sel[0])
            for (sel[1] = 0; sel[1] < 6; ++sel[1])
                for (sel[2] = 0; sel[2] < 6; ++sel[2])
                    for (sel[3] = 0; sel[3] < 6; ++sel[3]) {
                        if (sel[0] == sel[1] || sel[0] == sel[2] || sel[0] == sel[3] ||
                            sel[1] == sel[2] || sel[1] == sel[3] || sel[2] == sel[3])
                            continue;
                        bool ok = true;
                        for (auto [u, v] : pattern.edge_list())
                            if (!host.has_edge(sel[u], sel[v])) ok = false;
                        expected = expected || ok;
                    }
        CHECK((subgraph_contains(host, pattern).outcome == Outcome::found) == expected);
    }
}

namespace {

// Pruning-free reference matcher (plain backtracking, no twin or symmetry
// cuts) for cross-checking the engine on twin-rich patterns.
bool naive_contains(const Graph& host, const Graph& pattern, int pv, std::vector<int>& map,
                    std::uint64_t used) {
    if (pv == pattern.order()) return true;
    for (int h = 0; h < host.order(); ++h) {
        if ((used >> h) & 1u) continue;
        bool ok = true;
        std::uint64_t nb = pattern.neighbor_mask(pv);
        for (int u = 0; u < pv && ok; ++u)
            if (((nb >> u) & 1u) && !host.has_edge(map[u], h)) ok = false;
        if (!ok) continue;
        map[pv] = h;
        if (naive_contains(host, pattern, pv + 1, map, used | (1ULL << h))) return true;
    }
    return false;
}

bool naive_contains(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    std::vector<int> map(pattern.order(), -1);
    return naive_contains(host, pattern, 0, map, 0);
}

}  // namespace

TEST_CASE("engine agrees with a pruning-free matcher on twin-rich patterns") {
    std::mt19937_64 rng(71);
    std::vector<Graph> patterns = {complete(3),
                                   complete(4),
                                   matching(3),
                                   blowup(path(3), 3).graph,
                                   disjoint_union(complete(3), complete(3)),
                                   join(independent(2), independent(2)),
                                   turan(6, 3)};
    for (int trial = 0; trial < 250; ++trial) {
        const Graph& pattern = patterns[trial % patterns.size()];
        Graph host = random_graph(7 + static_cast<int>(rng() % 5), rng, 0.55);
        auto engine = subgraph_contains(host, pattern);
        REQUIRE(engine.outcome != Outcome::undecided);
        CHECK((engine.outcome == Outcome::found) == naive_contains(host, pattern));
    }
}

TEST_CASE("blow-up embedder on small knowns") {
    // Complete host of exactly the blow-up order contains it.
    CHECK(blowup_contains(complete(10), 3, 2, 2).outcome == Outcome::found);
    // One vertex short: absent by the order precondition.
    CHECK(blowup_contains(complete(9), 3, 2, 2).outcome == Outcome::absent);
    // The blow-up graph itself hosts it.
    CHECK(blowup_contains(blowup(lollipop(3, 2), 2).graph, 3, 2, 2).outcome == Outcome::found);
    CHECK(blowup_contains(blowup(lollipop(4, 3), 2).graph, 4, 3, 2).outcome == Outcome::found);
}

TEST_CASE("blow-up embedder finds and verifies witnesses in dominated hosts") {
    Graph host = realize(ConstructionSpec::h(40, 2, 4));
    auto result = blowup_contains(host, 3, 2, 2);
    REQUIRE(result.outcome == Outcome::found);
    REQUIRE(result.embedding.has_value());
    CHECK(verify_blowup_embedding(host, 3, 2, 2, *result.embedding));
}

TEST_CASE("blow-up embedder proves freeness of dominated hosts") {
    CHECK(blowup_contains(realize(ConstructionSpec::h(40, 2, 3)), 3, 2, 2).outcome ==
          Outcome::absent);
    CHECK(blowup_contains(realize(ConstructionSpec::h(30, 3, 3)), 3, 3, 3).outcome ==
          Outcome::absent);
}

TEST_CASE("blow-up embedder agrees with the generic engine on random hosts") {
    std::mt19937_64 rng(23);
    Graph pattern = blowup(lollipop(3, 2), 2).graph;
    for (int trial = 0; trial < 60; ++trial) {
        Graph host = random_graph(10 + static_cast<int>(rng() % 5), rng);
        auto fast = blowup_contains(host, 3, 2, 2);
        auto slow = subgraph_contains(host, pattern);
        REQUIRE(fast.outcome != Outcome::undecided);
        REQUIRE(slow.outcome != Outcome::undecided);
        CHECK(fast.outcome == slow.outcome);
    }
}

TEST_CASE("blow-up embedder agrees with the generic engine at p = 3 and (4,2)") {
    std::mt19937_64 rng(57);
    struct Cell {
        int k, ell, p;
    };
    for (Cell cell : {Cell{3, 2, 3}, Cell{4, 2, 2}}) {
        Graph pattern = blowup(lollipop(cell.k, cell.ell), cell.p).graph;
        int decided = 0;
        for (int trial = 0; trial < 40; ++trial) {
            int n = pattern.order() + static_cast<int>(rng() % 4);
            Graph host = random_graph(std::min(n, 18), rng, 0.75);
            auto fast = blowup_contains(host, cell.k, cell.ell, cell.p);
            auto slow = subgraph_contains(host, pattern);
            if (fast.outcome == Outcome::undecided || slow.outcome == Outcome::undecided) continue;
            CHECK(fast.outcome == slow.outcome);
            ++decided;
        }
        CHECK(decided >= 35);
    }
}

TEST_CASE("both engines agree on dominated hosts in both directions") {
    Graph pattern32 = blowup(lollipop(3, 2), 2).graph;
    CHECK(subgraph_contains(realize(ConstructionSpec::h(40, 2, 3)), pattern32).outcome ==
          Outcome::absent);
    CHECK(subgraph_contains(realize(ConstructionSpec::h(40, 2, 4)), pattern32).outcome ==
          Outcome::found);
    CHECK(blowup_contains(realize(ConstructionSpec::h(40, 2, 4)), 3, 2, 2).outcome ==
          Outcome::found);

    Graph pattern33 = blowup(lollipop(3, 3), 3).graph;
    CHECK(subgraph_contains(realize(ConstructionSpec::h(40, 3, 3)), pattern33).outcome ==
          Outcome::absent);
    CHECK(subgraph_contains(realize(ConstructionSpec::h(40, 3, 4)), pattern33).outcome ==
          Outcome::found);
    CHECK(blowup_contains(realize(ConstructionSpec::h(40, 3, 3)), 3, 3, 3).outcome ==
          Outcome::absent);
    CHECK(blowup_contains(realize(ConstructionSpec::h(40, 3, 4)), 3, 3, 3).outcome ==
          Outcome::found);
}

TEST_CASE("minimum vertex cover on knowns") {
    CHECK(min_vertex_cover(lollipop(3, 2)).size == 3);
    CHECK(min_vertex_cover(cycle(4)).size == 2);
    CHECK(min_vertex_cover(complete(5)).size == 4);
    CHECK(min_vertex_cover(independent(6)).size == 0);
    CHECK(min_vertex_cover(star(7)).size == 1);
    CHECK_THROWS_AS(min_vertex_cover(Graph(30)), std::invalid_argument);

    // Lollipop anchor: (k + l + 1) / 2 for odd cycle, even path.
    for (auto [k, ell] : {std::pair{3, 2}, {3, 4}, {5, 2}, {5, 4}})
        CHECK(min_vertex_cover(lollipop(k, ell)).size == (k + ell + 1) / 2);
}

TEST_CASE("minimum vertex cover matches exhaustive subsets at n <= 10") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, rng, 0.4);
        VertexCover vc = min_vertex_cover(g);
        // The returned set covers.
        for (auto [u, v] : g.edge_list()) {
            bool covered = ((vc.vertices >> u) & 1u) || ((vc.vertices >> v) & 1u);
            CHECK(covered);
        }
        CHECK(__builtin_popcountll(vc.vertices) == vc.size);
        // Nothing smaller covers.
        int best = n;
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
            bool covers = true;
            for (auto [u, v] : g.edge_list())
                if (!((s >> u) & 1u) && !((s >> v) & 1u)) covers = false;
            if (covers) best = std::min(best, __builtin_popcountll(s));
        }
        CHECK(vc.size == best);
    }
}

TEST_CASE("freeness certificates follow the parity cases") {
    // Odd cycle, odd path: counting case on H.
    auto cert = freeness_certificate(ConstructionSpec::h(40, 3, 3), 3, 3, 3);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::clique_budget);
    CHECK(cert->clique_budget == 5);
    CHECK(cert->demand == 6);

    // Odd cycle, even path: cover case on H.
    cert = freeness_certificate(ConstructionSpec::h(40, 2, 3), 3, 2, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::vertex_cover);
    CHECK(cert->q_size == 2);
    CHECK(cert->cover_bound == 3);

    // Even cycle, odd path: counting case on H' with one free clique.
    cert = freeness_certificate(ConstructionSpec::hprime(40, 2, 3), 4, 3, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->clique_budget == 6);
    CHECK(cert->demand == 7);

    // Even cycle, even path: counting case on H.
    cert = freeness_certificate(ConstructionSpec::h(40, 2, 3), 4, 2, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->clique_budget == 5);
    CHECK(cert->demand == 6);

    // A q too large for the inequality yields no certificate.
    CHECK_FALSE(freeness_certificate(ConstructionSpec::h(40, 2, 4), 3, 2, 2).has_value());
    CHECK_FALSE(freeness_certificate(ConstructionSpec::h(40, 3, 5), 3, 3, 3).has_value());
    // Variant that does not match the parity case yields no certificate.
    CHECK_FALSE(freeness_certificate(ConstructionSpec::hprime(40, 2, 3), 3, 3, 2).has_value());
    CHECK_FALSE(freeness_certificate(ConstructionSpec::hstar(40), 3, 2, 2).has_value());
}

TEST_CASE("valid certificates imply search-level freeness") {
    for (auto [k, ell, p] : {std::tuple{3, 2, 2}, {3, 3, 2}, {4, 2, 2}, {4, 3, 2}}) {
        auto pred = predicted_extremal(k, ell, p, 36);
        REQUIRE(pred.specs.size() == 1);
        auto cert = freeness_certificate(pred.specs[0], k, ell, p);
        REQUIRE(cert.has_value());
        CHECK(blowup_contains(realize(pred.specs[0]), k, ell, p).outcome == Outcome::absent);
    }
}
