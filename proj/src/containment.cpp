#include "ebu/containment.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace ebu {

namespace {

// Interchangeable-vertex ids: swapping two vertices with equal open
// neighbourhoods (false twins) or equal closed neighbourhoods (true twins) is
// an automorphism, so a failed branch rules out its unused twins too.
struct TwinIds {
    std::vector<int> open;
    std::vector<int> closed;
};

TwinIds twin_ids(const Graph& g) {
    const int n = g.order();
    TwinIds ids{std::vector<int>(n), std::vector<int>(n)};
    auto assign = [&](bool closed, std::vector<int>& out) {
        std::vector<std::pair<std::uint64_t, int>> keys(n);
        for (int v = 0; v < n; ++v)
            keys[v] = {g.neighbor_mask(v) | (closed ? (1ULL << v) : 0), v};
        std::sort(keys.begin(), keys.end());
        int id = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[i].first != keys[i - 1].first) ++id;
            out[keys[i].second] = id;
        }
    };
    assign(false, ids.open);
    assign(true, ids.closed);
    return ids;
}

// Disjoint symmetry classes of pattern vertices whose images may be freely
// permuted; breaking ties by index order keeps one embedding per orbit.
std::vector<std::vector<int>> pattern_symmetry_classes(const Graph& g) {
    const int n = g.order();
    TwinIds ids = twin_ids(g);
    std::vector<std::vector<int>> classes;
    std::vector<bool> taken(n, false);
    auto collect = [&](const std::vector<int>& key) {
        std::vector<std::vector<int>> by_id(n);
        for (int v = 0; v < n; ++v)
            if (!taken[v]) by_id[key[v]].push_back(v);
        for (auto& cls : by_id)
            if (cls.size() >= 2) {
                for (int v : cls) taken[v] = true;
                classes.push_back(std::move(cls));
            }
    };
    collect(ids.open);
    collect(ids.closed);
    return classes;
}

struct SubgraphSearcher {
    const Graph& host;
    const Graph& pattern;
    const SearchLimits& limits;

    int hn, pn;
    std::vector<std::uint64_t> host_adj;
    std::vector<int> host_deg;
    TwinIds host_twins;
    std::vector<int> order;               // pattern vertices in placement order
    std::vector<std::vector<int>> preds;  // placed pattern neighbours per order slot
    std::vector<std::uint64_t> deg_ok;    // per order slot: hosts with enough degree
    std::vector<int> sym_class;           // pattern vertex -> class id or -1
    std::vector<std::vector<int>> classes;

    std::vector<int> map;
    std::uint64_t used = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    SubgraphSearcher(const Graph& h, const Graph& p, const SearchLimits& lim)
        : host(h), pattern(p), limits(lim), hn(h.order()), pn(p.order()) {
        host_adj.resize(hn);
        host_deg.resize(hn);
        for (int v = 0; v < hn; ++v) {
            host_adj[v] = h.neighbor_mask(v);
            host_deg[v] = __builtin_popcountll(host_adj[v]);
        }
        host_twins = twin_ids(h);
        build_order();
        classes = pattern_symmetry_classes(p);
        sym_class.assign(pn, -1);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) sym_class[v] = static_cast<int>(c);
        map.assign(pn, -1);
    }

    void build_order() {
        std::vector<bool> placed(pn, false);
        order.reserve(pn);
        preds.resize(pn);
        deg_ok.resize(pn);
        for (int step = 0; step < pn; ++step) {
            int best = -1, best_links = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[v]) continue;
                int links = 0;
                std::uint64_t nb = pattern.neighbor_mask(v);
                for (int u : order)
                    if ((nb >> u) & 1u) ++links;
                if (best < 0 || links > best_links ||
                    (links == best_links && pattern.degree(v) > pattern.degree(best)))
                    best = v, best_links = links;
            }
            preds[step].clear();
            std::uint64_t nb = pattern.neighbor_mask(best);
            for (int u : order)
                if ((nb >> u) & 1u) preds[step].push_back(u);
            std::uint64_t ok = 0;
            for (int h = 0; h < hn; ++h)
                if (host_deg[h] >= pattern.degree(best)) ok |= 1ULL << h;
            deg_ok[step] = ok;
            order.push_back(best);
            placed[best] = true;
        }
    }

    // Images of a symmetry class must increase along the placement order;
    // together with ascending candidate order this keeps the twin skip below
    // exact (a failed smaller twin rules its larger twins out).
    bool symmetry_ok(int pv, int h) const {
        if (sym_class[pv] < 0) return true;
        for (int u : classes[sym_class[pv]]) {
            if (u == pv || map[u] < 0) continue;
            if (h <= map[u]) return false;
        }
        return true;
    }

    bool extend(int step) {
        if (step == pn) return true;
        const int pv = order[step];
        std::uint64_t cands = ~used & deg_ok[step];
        if (hn < 64) cands &= (1ULL << hn) - 1;
        for (int u : preds[step]) cands &= host_adj[map[u]];

        std::vector<int> tried;
        std::uint64_t rest = cands;
        while (rest) {
            int h = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (++nodes > limits.max_nodes) {
                out_of_budget = true;
                return false;
            }
            if (!symmetry_ok(pv, h)) continue;
            bool twin_skip = false;
            for (int w : tried)
                if (host_twins.open[w] == host_twins.open[h] ||
                    host_twins.closed[w] == host_twins.closed[h]) {
                    twin_skip = true;
                    break;
                }
            if (twin_skip) continue;
            tried.push_back(h);
            map[pv] = h;
            used |= 1ULL << h;
            if (extend(step + 1)) return true;
            used &= ~(1ULL << h);
            map[pv] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.order()) return false;
    std::uint64_t seen = 0;
    for (int h : e.map) {
        if (h < 0 || h >= host.order()) return false;
        if ((seen >> h) & 1u) return false;
        seen |= 1ULL << h;
    }
    for (auto [u, v] : pattern.edge_list())
        if (!host.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

ContainmentResult subgraph_contains(const Graph& host, const Graph& pattern,
                                    const SearchLimits& limits) {
    if (pattern.order() == 0) return {Outcome::found, Embedding{{}}, 0};
    if (pattern.order() > host.order()) return {Outcome::absent, std::nullopt, 0};

    SubgraphSearcher s(host, pattern, limits);
    bool found = s.extend(0);
    if (found) {
        Embedding e{s.map};
        if (!verify_embedding(host, pattern, e))
            throw std::logic_error("subgraph_contains produced an invalid embedding");
        return {Outcome::found, e, s.nodes};
    }
    if (s.out_of_budget) return {Outcome::undecided, std::nullopt, s.nodes};
    return {Outcome::absent, std::nullopt, s.nodes};
}

std::vector<std::pair<int, int>> lollipop_edge_order(int k, int ell) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(k - 1, 0);
    edges.emplace_back(0, k);
    for (int i = k; i + 1 < k + ell; ++i) edges.emplace_back(i, i + 1);
    return edges;
}

namespace {

// Maximum bipartite matching between lollipop edges and candidate apex
// vertices, by augmenting paths. Complete decision procedure for the p = 2
// apex stage: one apex per edge, all distinct.
struct ApexMatcher {
    const std::vector<std::uint64_t>& cands;  // per edge
    int hn;
    std::vector<int> host_match;  // host vertex -> edge or -1

    ApexMatcher(const std::vector<std::uint64_t>& c, int hn_) : cands(c), hn(hn_) {
        host_match.assign(hn, -1);
    }

    bool augment(int e, std::uint64_t& visited) {
        std::uint64_t options = cands[e] & ~visited;
        visited |= options;
        while (options) {
            int v = __builtin_ctzll(options);
            options &= options - 1;
            if (host_match[v] < 0 || augment(host_match[v], visited)) {
                host_match[v] = e;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        for (int e = 0; e < static_cast<int>(cands.size()); ++e) {
            std::uint64_t visited = 0;
            if (!augment(e, visited)) return false;
        }
        return true;
    }
};

struct BlowupSearcher {
    const Graph& host;
    int k, ell, p;
    const SearchLimits& limits;

    int hn, bn;
    std::vector<std::uint64_t> host_adj;
    std::vector<int> host_deg;
    TwinIds host_twins;
    std::vector<std::pair<int, int>> edges;  // lollipop_edge_order
    std::vector<int> base_map;
    std::uint64_t base_used = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<int>> apex_result;

    BlowupSearcher(const Graph& h, int k_, int ell_, int p_, const SearchLimits& lim)
        : host(h), k(k_), ell(ell_), p(p_), limits(lim), hn(h.order()), bn(k_ + ell_) {
        host_adj.resize(hn);
        host_deg.resize(hn);
        for (int v = 0; v < hn; ++v) {
            host_adj[v] = h.neighbor_mask(v);
            host_deg[v] = __builtin_popcountll(host_adj[v]);
        }
        host_twins = twin_ids(h);
        edges = lollipop_edge_order(k, ell);
        base_map.assign(bn, -1);
    }

    int base_degree(int v) const {
        if (v == 0) return 3;
        if (v == bn - 1) return 1;
        return 2;
    }

    // Placed base neighbours of base vertex v under the placement order
    // 0, 1, ..., k-1, k, ..., k+l-1.
    std::array<int, 2> placed_neighbors(int v) const {
        if (v == 0) return {-1, -1};
        if (v < k - 1) return {v - 1, -1};
        if (v == k - 1) return {v - 1, 0};
        if (v == k) return {0, -1};
        return {v - 1, -1};
    }

    bool place(int v) {
        if (v == bn) return assign_apexes();
        std::uint64_t cands = ~base_used;
        if (hn < 64) cands &= (1ULL << hn) - 1;
        for (int u : placed_neighbors(v))
            if (u >= 0) cands &= host_adj[base_map[u]];
        std::vector<int> tried;
        std::uint64_t rest = cands;
        while (rest) {
            int h = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (++nodes > limits.max_nodes) {
                out_of_budget = true;
                return false;
            }
            // Each base edge at v consumes p-1 apexes adjacent to its image.
            if (host_deg[h] < p * base_degree(v)) continue;
            // Cycle reflection: fix the traversal direction at the center.
            if (v == k - 1 && h < base_map[1]) continue;
            bool twin_skip = false;
            for (int w : tried)
                if (host_twins.open[w] == host_twins.open[h] ||
                    host_twins.closed[w] == host_twins.closed[h]) {
                    twin_skip = true;
                    break;
                }
            if (twin_skip) continue;
            tried.push_back(h);
            base_map[v] = h;
            base_used |= 1ULL << h;
            if (place(v + 1)) return true;
            base_used &= ~(1ULL << h);
            base_map[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool assign_apexes() {
        std::vector<std::uint64_t> cands(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            cands[e] = host_adj[base_map[a]] & host_adj[base_map[b]] & ~base_used;
            if (hn < 64) cands[e] &= (1ULL << hn) - 1;
            if (__builtin_popcountll(cands[e]) < p - 1) return false;
        }
        if (p == 2) {
            ApexMatcher matcher(cands, hn);
            if (!matcher.perfect()) return false;
            apex_result.assign(edges.size(), {});
            for (int v = 0; v < hn; ++v)
                if (matcher.host_match[v] >= 0) apex_result[matcher.host_match[v]] = {v};
            return true;
        }
        // p >= 3: most-constrained edge first, then backtrack over apex
        // cliques inside each edge's candidate set.
        std::vector<int> edge_order(edges.size());
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
            int ca = __builtin_popcountll(cands[a]), cb = __builtin_popcountll(cands[b]);
            return ca != cb ? ca < cb : a < b;
        });
        apex_result.assign(edges.size(), {});
        std::uint64_t apex_used = 0;
        return assign_edge(0, edge_order, cands, apex_used);
    }

    bool assign_edge(size_t idx, const std::vector<int>& edge_order,
                     const std::vector<std::uint64_t>& cands, std::uint64_t& apex_used) {
        if (idx == edge_order.size()) return true;
        int e = edge_order[idx];
        std::vector<int> chosen;
        return pick_apex(e, cands[e] & ~apex_used, chosen, idx, edge_order, cands, apex_used);
    }

    bool pick_apex(int e, std::uint64_t avail, std::vector<int>& chosen, size_t idx,
                   const std::vector<int>& edge_order, const std::vector<std::uint64_t>& cands,
                   std::uint64_t& apex_used) {
        if (static_cast<int>(chosen.size()) == p - 1) {
            std::uint64_t mask = 0;
            for (int v : chosen) mask |= 1ULL << v;
            apex_used |= mask;
            apex_result[e] = chosen;
            if (assign_edge(idx + 1, edge_order, cands, apex_used)) return true;
            apex_used &= ~mask;
            apex_result[e].clear();
            return false;
        }
        // Ascending choice keeps sets ordered and avoids permuted repeats.
        std::uint64_t rest = avail;
        if (!chosen.empty())
            rest = chosen.back() >= 63 ? 0 : (rest & (~0ULL << (chosen.back() + 1)));
        std::vector<int> tried;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (++nodes > limits.max_nodes) {
                out_of_budget = true;
                return false;
            }
            bool twin_skip = false;
            for (int w : tried)
                if (host_twins.open[w] == host_twins.open[v] ||
                    host_twins.closed[w] == host_twins.closed[v]) {
                    twin_skip = true;
                    break;
                }
            if (twin_skip) continue;
            tried.push_back(v);
            chosen.push_back(v);
            if (pick_apex(e, avail & host_adj[v], chosen, idx, edge_order, cands, apex_used))
                return true;
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

bool verify_blowup_embedding(const Graph& host, int k, int ell, int p, const BlowupEmbedding& e) {
    const int bn = k + ell;
    auto edges = lollipop_edge_order(k, ell);
    if (static_cast<int>(e.base_map.size()) != bn) return false;
    if (e.apex_sets.size() != edges.size()) return false;
    std::uint64_t seen = 0;
    auto take = [&](int v) {
        if (v < 0 || v >= host.order() || ((seen >> v) & 1u)) return false;
        seen |= 1ULL << v;
        return true;
    };
    for (int v : e.base_map)
        if (!take(v)) return false;
    for (const auto& apexes : e.apex_sets) {
        if (static_cast<int>(apexes.size()) != p - 1) return false;
        for (int v : apexes)
            if (!take(v)) return false;
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        std::vector<int> clique = {e.base_map[a], e.base_map[b]};
        clique.insert(clique.end(), e.apex_sets[i].begin(), e.apex_sets[i].end());
        for (size_t x = 0; x < clique.size(); ++x)
            for (size_t y = x + 1; y < clique.size(); ++y)
                if (!host.has_edge(clique[x], clique[y])) return false;
    }
    return true;
}

BlowupContainmentResult blowup_contains(const Graph& host, int k, int ell, int p,
                                        const SearchLimits& limits) {
    LollipopParams params(k, ell);
    if (p < 2) throw std::invalid_argument("blowup_contains requires p >= 2");
    if (host.order() < params.m(p)) return {Outcome::absent, std::nullopt, 0};

    BlowupSearcher s(host, k, ell, p, limits);
    bool found = s.place(0);
    if (found) {
        BlowupEmbedding e{s.base_map, s.apex_result};
        if (!verify_blowup_embedding(host, k, ell, p, e))
            throw std::logic_error("blowup_contains produced an invalid embedding");
        return {Outcome::found, e, s.nodes};
    }
    if (s.out_of_budget) return {Outcome::undecided, std::nullopt, s.nodes};
    return {Outcome::absent, std::nullopt, s.nodes};
}

namespace {

int greedy_matching_size(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    int size = 0;
    std::uint64_t avail = alive;
    while (avail) {
        int u = __builtin_ctzll(avail);
        avail &= avail - 1;
        std::uint64_t nb = adj[u] & avail;
        if (nb) {
            int v = __builtin_ctzll(nb);
            avail &= ~(1ULL << v);
            ++size;
        }
    }
    return size;
}

struct CoverSearcher {
    const std::vector<std::uint64_t>& adj;
    int best_size;
    std::uint64_t best_cover = 0;

    void search(std::uint64_t alive, std::uint64_t cover, int size) {
        if (size + greedy_matching_size(adj, alive) >= best_size) return;
        int v = -1, vdeg = 0;
        std::uint64_t rest = alive;
        while (rest) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            int d = __builtin_popcountll(adj[u] & alive);
            if (d > vdeg) v = u, vdeg = d;
        }
        if (v < 0 || vdeg <= 1) {
            // Remaining edges form a matching; cover each with its lower end.
            std::uint64_t avail = alive;
            while (avail) {
                int u = __builtin_ctzll(avail);
                avail &= avail - 1;
                std::uint64_t nb = adj[u] & avail;
                if (nb) {
                    avail &= ~(1ULL << __builtin_ctzll(nb));
                    cover |= 1ULL << u;
                    ++size;
                }
            }
            if (size < best_size) {
                best_size = size;
                best_cover = cover;
            }
            return;
        }
        // Branch: v in the cover, or all of N(v) in the cover.
        search(alive & ~(1ULL << v), cover | (1ULL << v), size + 1);
        std::uint64_t nb = adj[v] & alive;
        search(alive & ~nb & ~(1ULL << v), cover | nb, size + __builtin_popcountll(nb));
    }
};

}  // namespace

VertexCover min_vertex_cover(const Graph& g, int cap) {
    if (g.order() > cap)
        throw std::invalid_argument("min_vertex_cover: order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(cap));
    std::vector<std::uint64_t> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
    CoverSearcher searcher{adj, g.order() + 1, 0};
    searcher.search(g.vertex_mask(), 0, 0);
    return {searcher.best_size, searcher.best_cover};
}

std::optional<FreenessCertificate> freeness_certificate(const ConstructionSpec& spec, int k,
                                                        int ell, int p) {
    LollipopParams params(k, ell);
    if (p < 2) throw std::invalid_argument("freeness_certificate requires p >= 2");
    if (spec.variant != Variant::H && spec.variant != Variant::Hprime) return std::nullopt;
    validate(spec);

    const bool k_odd = k % 2 == 1, l_odd = ell % 2 == 1;
    const int demand = k + ell;  // one clique per lollipop edge
    FreenessCertificate cert;
    cert.host_spec = spec;

    if (spec.variant == Variant::H && k_odd && !l_odd) {
        // Cover case: a contained blow-up would force Q to cover the lollipop.
        cert.kind = CertificateKind::vertex_cover;
        cert.q_size = spec.q - 1;
        cert.cover_bound = min_vertex_cover(lollipop(k, ell)).size;
        if (cert.q_size < cert.cover_bound) return cert;
        return std::nullopt;
    }
    // Counting case: one Q vertex meets at most two blow-up cliques, except a
    // center image which meets three; H' frees one clique from Q entirely.
    bool counting_applies = (spec.variant == Variant::H && k_odd && l_odd) ||
                            (spec.variant == Variant::Hprime && !k_odd && l_odd) ||
                            (spec.variant == Variant::H && !k_odd && !l_odd);
    if (!counting_applies) return std::nullopt;
    cert.kind = CertificateKind::clique_budget;
    cert.clique_budget = 2 * (spec.q - 2) + 3 + (spec.variant == Variant::Hprime ? 1 : 0);
    cert.demand = demand;
    if (cert.clique_budget < cert.demand) return cert;
    return std::nullopt;
}

}  // namespace ebu
