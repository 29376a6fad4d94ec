#include <doctest.h>

#include <algorithm>
#include <random>

#include "ebu/blowup.hpp"
#include "ebu/constructions.hpp"

using namespace ebu;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double prob = 0.5) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < prob) g = g.with_edge(u, v);
    return g;
}

// One-by-one splitting in the given vertex order; tracks label shifts so the
// library's single-pass result can be compared against the sequential
// definition.
Graph sequential_split(const Graph& base, std::vector<int> order) {
    Graph g = base;
    std::vector<int> current(base.order());
    for (int v = 0; v < base.order(); ++v) current[v] = v;
    for (int v : order) {
        int cur = current[v];
        g = vertex_split(g, 1ULL << cur);
        for (int u = 0; u < base.order(); ++u)
            if (current[u] > cur) --current[u];
            else if (current[u] == cur) current[u] = -1;
    }
    return g;
}

}  // namespace

TEST_CASE("blow-up of a single edge is a clique") {
    for (int p : {2, 3, 4}) {
        BlowupResult r = blowup(path(2), p);
        CHECK(r.graph == complete(p + 1));
        CHECK(r.edge_cliques.size() == 1);
        CHECK(static_cast<int>(r.edge_cliques[0].size()) == p - 1);
    }
}

TEST_CASE("blow-up sizes on knowns") {
    BlowupResult r = blowup(lollipop(3, 2), 2);
    CHECK(r.graph.order() == 10);
    CHECK(r.graph.size() == 15);

    CHECK(blowup(complete(3), 2).graph.order() == 6);
    CHECK(blowup(complete(3), 2).graph.size() == 9);

    CHECK(blowup(lollipop(3, 3), 3).graph.order() == 18);
    CHECK_THROWS_AS(blowup(path(2), 1), std::invalid_argument);
}

TEST_CASE("blow-up order and edge counts match closed forms on random bases") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);  // up to 8
        Graph base = random_graph(n, rng);
        for (int p : {2, 3}) {
            if (n + base.size() * (p - 1) > kMaxVertices) continue;
            BlowupResult r = blowup(base, p);
            CHECK(r.graph.order() == n + base.size() * (p - 1));
            CHECK(r.graph.size() == base.size() * (p + 1) * p / 2);
            // Each base edge's endpoints plus its fresh vertices induce a
            // clique of order p+1.
            auto edges = base.edge_list();
            for (size_t e = 0; e < edges.size(); ++e) {
                std::vector<int> clique = {edges[e].first, edges[e].second};
                for (int f : r.edge_cliques[e]) clique.push_back(f);
                for (size_t a = 0; a < clique.size(); ++a)
                    for (size_t b = a + 1; b < clique.size(); ++b)
                        CHECK(r.graph.has_edge(clique[a], clique[b]));
            }
        }
    }
}

TEST_CASE("vertex split on knowns") {
    // Splitting the lollipop center detaches the cycle and the path.
    Graph split_center = vertex_split(lollipop(3, 2), 1ULL << 0);
    CHECK(is_isomorphic(split_center, disjoint_union(path(4), path(3))));

    // Splitting any single vertex of a cycle opens it into a path.
    CHECK(is_isomorphic(vertex_split(cycle(4), 1ULL << 2), path(5)));

    // Empty split set is the identity.
    CHECK(vertex_split(lollipop(3, 2), 0) == lollipop(3, 2));

    // Degree-1 vertices cannot be split.
    CHECK_THROWS_AS(vertex_split(lollipop(3, 2), 1ULL << 4), std::invalid_argument);
    CHECK_THROWS_AS(vertex_split(path(3), 1ULL << 0), std::invalid_argument);
}

TEST_CASE("vertex split ignores processing order") {
    std::mt19937_64 rng(29);
    int checked = 0;
    while (checked < 100) {
        int n = 4 + static_cast<int>(rng() % 7);  // up to 10
        Graph base = random_graph(n, rng, 0.5);
        std::uint64_t splittable = 0;
        for (int v = 0; v < n; ++v)
            if (base.degree(v) >= 2) splittable |= 1ULL << v;
        if (__builtin_popcountll(splittable) < 2) continue;
        // Random admissible subset of size >= 2.
        std::vector<int> pool;
        for (int v = 0; v < n; ++v)
            if ((splittable >> v) & 1u) pool.push_back(v);
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t take = 2 + rng() % (pool.size() - 1);
        std::vector<int> order(pool.begin(), pool.begin() + std::min(take, pool.size()));
        std::uint64_t u_set = 0;
        for (int v : order) u_set |= 1ULL << v;

        Graph bulk = vertex_split(base, u_set);
        Graph seq1 = sequential_split(base, order);
        std::shuffle(order.begin(), order.end(), rng);
        Graph seq2 = sequential_split(base, order);
        CHECK(is_isomorphic(bulk, seq1));
        CHECK(is_isomorphic(seq1, seq2));
        ++checked;
    }
}

TEST_CASE("split families of the (3,2) lollipop") {
    Graph base = lollipop(3, 2);
    GraphFamily star = split_family(base, SplitMode::independent);
    CHECK(star.contains(base));  // U may be empty
    CHECK(star.contains(disjoint_union(path(4), path(3))));

    GraphFamily all = split_family(base, SplitMode::all);
    GraphFamily chi2 = split_family(base, SplitMode::chi_bound, 2);
    CHECK(star.is_subfamily_of(chi2));
    CHECK(chi2.is_subfamily_of(all));

    // Every Y-member arises from one split of a non-center cycle vertex.
    for (const Graph& y : y_family(3, 2).members()) {
        bool matched = false;
        for (int v = 1; v < 3; ++v)
            matched = matched || is_isomorphic(vertex_split(base, 1ULL << v), y);
        CHECK(matched);
        CHECK(star.contains(y));
    }
    CHECK_THROWS_AS(split_family(complete(13), SplitMode::all), std::invalid_argument);
}

TEST_CASE("family chain for the acceptance bases") {
    for (auto [k, ell] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        Graph base = lollipop(k, ell);
        GraphFamily star = split_family(base, SplitMode::independent);
        GraphFamily all = split_family(base, SplitMode::all);
        for (int p : {2, 3}) {
            GraphFamily chi = split_family(base, SplitMode::chi_bound, p - 1);
            CHECK(star.is_subfamily_of(chi));
            CHECK(chi.is_subfamily_of(all));
        }
        CHECK(y_family(k, ell).is_subfamily_of(star));
        // Each Y-member is one split of a non-center cycle vertex.
        for (const Graph& y : y_family(k, ell).members()) {
            bool matched = false;
            for (int v = 1; v < k; ++v)
                matched = matched || is_isomorphic(vertex_split(base, 1ULL << v), y);
            CHECK(matched);
        }
    }
}

TEST_CASE("decomposition membership checks") {
    // The split-centre graph carries the blow-up once joined with enough
    // independent vertices.
    Graph m = disjoint_union(path(4), path(3));
    Graph l = blowup(lollipop(3, 2), 2).graph;
    CHECK(decomposition_member_check(m, l, 2, 10).outcome == Outcome::found);

    // A single vertex cannot carry a triangle: the host stays bipartite.
    CHECK(decomposition_member_check(independent(1), complete(3), 2, 1).outcome == Outcome::absent);

    // Every Y-member carries the blow-up as well.
    for (const Graph& y : y_family(3, 2).members())
        CHECK(decomposition_member_check(y, l, 2, 10).outcome == Outcome::found);

    // Oversized hosts come back undecided, never silently false.
    CHECK(decomposition_member_check(complete(8), l, 2, 40).outcome == Outcome::undecided);
}

TEST_CASE("decomposition membership is monotone in t") {
    Graph l = blowup(lollipop(3, 2), 2).graph;
    for (const Graph& m : split_family(lollipop(3, 2), SplitMode::independent).members()) {
        bool prev = false;
        for (int t : {8, 10, 12, 14}) {
            auto r = decomposition_member_check(m, l, 2, t);
            REQUIRE(r.outcome != Outcome::undecided);
            bool now = r.outcome == Outcome::found;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("decomposition family of the triangle is the single edge") {
    auto result = decomposition_family_bruteforce(complete(3), 2, 2, 3);
    CHECK_FALSE(result.partial);
    REQUIRE(result.family.size() == 1);
    CHECK(result.family.contains(path(2)));
}

TEST_CASE("decomposition family at p = 3 matches the chi-bounded split family") {
    // chi(C_{3,3}) = 3 = p, so the minimal carriers are exactly the splits
    // of subsets inducing a bipartite subgraph; compare within order 7.
    Graph l = blowup(lollipop(3, 3), 3).graph;
    auto brute = decomposition_family_bruteforce(l, 3, 7, l.order());
    CHECK_FALSE(brute.partial);

    GraphFamily expected;
    for (const Graph& g : split_family(lollipop(3, 3), SplitMode::chi_bound, 2).members())
        if (g.order() <= 7) expected.insert(g);
    CHECK(brute.family == expected);
}

TEST_CASE("members of a decomposition family are edge-minimal") {
    Graph l = blowup(lollipop(3, 2), 2).graph;
    auto result = decomposition_family_bruteforce(l, 2, 7, 10);
    CHECK_FALSE(result.partial);
    CHECK(result.family.size() >= 1);
    for (const Graph& m : result.family.members()) {
        CHECK(decomposition_member_check(m, l, 2, 10).outcome == Outcome::found);
        for (auto [u, v] : m.edge_list()) {
            Graph smaller = m.without_edge(u, v);
            CHECK(decomposition_member_check(smaller, l, 2, 10).outcome == Outcome::absent);
        }
    }
}
