#include "ebu/blowup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ebu/search.hpp"

namespace ebu {

BlowupResult blowup(const Graph& base, int p) {
    if (p < 2) throw std::invalid_argument("blowup requires p >= 2");
    const auto base_edges = base.edge_list();
    const int n0 = base.order();
    const int n = n0 + static_cast<int>(base_edges.size()) * (p - 1);
    if (n > kMaxVertices)
        throw std::invalid_argument("blow-up order " + std::to_string(n) + " exceeds the vertex cap");

    std::vector<std::pair<int, int>> edges = base_edges;
    std::vector<std::vector<int>> cliques;
    cliques.reserve(base_edges.size());
    int fresh = n0;
    for (auto [u, v] : base_edges) {
        std::vector<int> clique = {u, v};
        std::vector<int> fresh_here;
        for (int i = 0; i < p - 1; ++i) {
            for (int w : clique) edges.emplace_back(w, fresh);
            clique.push_back(fresh);
            fresh_here.push_back(fresh);
            ++fresh;
        }
        cliques.push_back(std::move(fresh_here));
    }
    std::vector<int> base_map(n0);
    for (int v = 0; v < n0; ++v) base_map[v] = v;
    return {Graph::from_edge_list(n, edges), std::move(base_map), std::move(cliques)};
}

Graph vertex_split(const Graph& base, std::uint64_t u_set) {
    u_set &= base.vertex_mask();
    const int n0 = base.order();
    int result_order = n0;
    for (int v = 0; v < n0; ++v) {
        if (!((u_set >> v) & 1u)) continue;
        if (base.degree(v) < 2)
            throw std::invalid_argument("vertex_split: vertex " + std::to_string(v) +
                                        " has degree < 2");
        result_order += base.degree(v) - 1;
    }
    if (result_order > kMaxVertices)
        throw std::invalid_argument("vertex_split: result order " + std::to_string(result_order) +
                                    " exceeds the vertex cap");
    // Kept vertices first (dense, order preserved), then fresh leaves in base
    // edge order.
    std::vector<int> label(n0, -1);
    int m = 0;
    for (int v = 0; v < n0; ++v)
        if (!((u_set >> v) & 1u)) label[v] = m++;
    std::vector<std::pair<int, int>> edges;
    int fresh = m;
    int total = m;
    for (auto [u, v] : base.edge_list()) {
        bool su = (u_set >> u) & 1u, sv = (u_set >> v) & 1u;
        if (!su && !sv) {
            edges.emplace_back(label[u], label[v]);
        } else if (su && sv) {
            edges.emplace_back(fresh, fresh + 1);
            fresh += 2;
            total += 2;
        } else {
            int kept = su ? label[v] : label[u];
            edges.emplace_back(kept, fresh);
            ++fresh;
            ++total;
        }
    }
    return Graph::from_edge_list(total, edges);
}

GraphFamily split_family(const Graph& base, SplitMode mode, int p, int max_base_order) {
    const int n = base.order();
    if (n > max_base_order || n > 20)
        throw std::invalid_argument("split_family: base order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(std::min(max_base_order, 20)));
    if (mode == SplitMode::chi_bound && p < 1)
        throw std::invalid_argument("split_family: chi_bound mode requires p >= 1");

    std::uint64_t splittable = 0;
    for (int v = 0; v < n; ++v)
        if (base.degree(v) >= 2) splittable |= 1ULL << v;

    GraphFamily family;
    for (std::uint64_t u = 0; u < (1ULL << n); ++u) {
        if ((u & splittable) != u) continue;
        if (mode == SplitMode::independent) {
            bool indep = true;
            for (int v = 0; v < n && indep; ++v)
                if (((u >> v) & 1u) && (base.neighbor_mask(v) & u)) indep = false;
            if (!indep) continue;
        } else if (mode == SplitMode::chi_bound) {
            if (chromatic_number(base.induced(u)) > p) continue;
        }
        family.insert(vertex_split(base, u));
    }
    return family;
}

namespace {

Graph decomposition_host(const Graph& m, int p, int t) {
    Graph left = disjoint_union(m, independent(t));
    if (p == 1) return left;
    return join(left, complete_multipartite(std::vector<int>(p - 1, t)));
}

Graph drop_isolated(const Graph& g) {
    std::uint64_t keep = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep |= 1ULL << v;
    return g.induced(keep);
}

}  // namespace

ContainmentResult decomposition_member_check(const Graph& m, const Graph& l, int p, int t,
                                             const SearchLimits& limits) {
    if (p < 1) throw std::invalid_argument("decomposition_member_check requires p >= 1");
    if (t < 0) throw std::invalid_argument("decomposition_member_check requires t >= 0");
    if (m.order() + t + (p - 1) * t > kMaxVertices)
        return {Outcome::undecided, std::nullopt, 0};  // host exceeds the engine limit
    return subgraph_contains(decomposition_host(m, p, t), l, limits);
}

DecompositionFamilyResult decomposition_family_bruteforce(const Graph& l, int p,
                                                          int max_m_vertices, int t_max,
                                                          const SearchLimits& limits) {
    if (max_m_vertices < 1 || max_m_vertices > 8)
        throw std::invalid_argument("decomposition_family_bruteforce: max_m_vertices must be in [1,8]");
    if (t_max < l.order())
        throw std::invalid_argument("decomposition_family_bruteforce: t_max must be >= |V(L)|");

    DecompositionFamilyResult result;
    // Membership of every candidate (no isolated vertices), keyed by code, so
    // the minimality pass can look deletions up instead of re-searching.
    std::map<CanonicalCode, bool> member;
    std::vector<Graph> members;

    for (int nm = 1; nm <= max_m_vertices; ++nm) {
        enumerate_graphs(nm, nullptr, [&](const Graph& cand) {
            bool isolated = false;
            for (int v = 0; v < cand.order(); ++v)
                if (cand.degree(v) == 0) isolated = true;
            if (isolated) return;
            auto check = decomposition_member_check(cand, l, p, t_max, limits);
            if (check.outcome == Outcome::undecided) {
                result.partial = true;
                return;
            }
            bool ok = check.outcome == Outcome::found;
            member[canonical_form(cand)] = ok;
            if (ok) members.push_back(cand);
        });
    }

    for (const Graph& m : members) {
        bool minimal = true;
        auto passes = [&](const Graph& sub) {
            Graph normal = drop_isolated(sub);
            if (normal.order() == 0) return false;
            auto it = member.find(canonical_form(normal));
            if (it != member.end()) return it->second;
            auto check = decomposition_member_check(normal, l, p, t_max, limits);
            if (check.outcome == Outcome::undecided) {
                result.partial = true;
                return false;
            }
            return check.outcome == Outcome::found;
        };
        for (auto [u, v] : m.edge_list()) {
            if (passes(m.without_edge(u, v))) {
                minimal = false;
                break;
            }
        }
        for (int v = 0; minimal && v < m.order(); ++v)
            if (passes(m.induced(m.vertex_mask() & ~(1ULL << v)))) minimal = false;
        if (minimal) result.family.insert(m);
    }
    return result;
}

}  // namespace ebu
