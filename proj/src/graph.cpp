#include "ebu/graph.hpp"

#include <algorithm>

namespace ebu {

int Graph::size() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += __builtin_popcountll(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + __builtin_ctzll(higher);
            edges.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return edges;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = __builtin_popcountll(adj_[v]);
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge_internal(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~(1ULL << v);
    g.adj_[v] &= ~(1ULL << u);
    return g;
}

Graph Graph::induced(std::uint64_t keep) const {
    keep &= vertex_mask();
    std::vector<int> label(n_, -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1u) label[v] = m++;
    Graph g(m);
    for (int v = 0; v < n_; ++v) {
        if (label[v] < 0) continue;
        std::uint64_t nb = adj_[v] & keep;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (u > v) g.add_edge_internal(label[v], label[u]);
        }
    }
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match graph order");
    Graph g(n_);
    for (auto [u, v] : edge_list()) g.add_edge_internal(perm[u], perm[v]);
    return g;
}

std::vector<std::uint64_t> Graph::components() const {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < n_; ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = 1ULL << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = adj_[u] & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool Graph::connected() const {
    return n_ <= 1 || components().size() == 1;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires order >= 1");
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star requires at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires order >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph independent(int n) {
    if (n < 1) throw std::invalid_argument("independent set requires order >= 1");
    return Graph(n);
}

Graph matching(int k) {
    if (k < 1) throw std::invalid_argument("matching requires size >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edge_list(2 * k, edges);
}

Graph make_basic(BasicKind kind, int size) {
    switch (kind) {
        case BasicKind::path: return path(size);
        case BasicKind::cycle: return cycle(size);
        case BasicKind::star: return star(size);
        case BasicKind::complete: return complete(size);
        case BasicKind::independent: return independent(size);
        case BasicKind::matching: return matching(size);
    }
    throw std::invalid_argument("unknown basic graph kind");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph r(g.order() + h.order());
    std::vector<std::pair<int, int>> edges = g.edge_list();
    const int off = g.order();
    for (auto [u, v] : h.edge_list()) edges.emplace_back(u + off, v + off);
    return Graph::from_edge_list(r.order(), edges);
}

Graph copies(int k, const Graph& h) {
    if (k < 1) throw std::invalid_argument("copies requires k >= 1");
    Graph r = h;
    for (int i = 1; i < k; ++i) r = disjoint_union(r, h);
    return r;
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edge_list();
    const int off = g.order();
    for (auto [u, v] : h.edge_list()) edges.emplace_back(u + off, v + off);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, off + v);
    return Graph::from_edge_list(g.order() + h.order(), edges);
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
        n += s;
    }
    std::vector<std::pair<int, int>> edges;
    int a_begin = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        int b_begin = a_begin + sizes[i];
        for (size_t j = i + 1; j < sizes.size(); ++j) {
            for (int u = a_begin; u < a_begin + sizes[i]; ++u)
                for (int v = b_begin; v < b_begin + sizes[j]; ++v) edges.emplace_back(u, v);
            b_begin += sizes[j];
        }
        a_begin += sizes[i];
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<int> turan_part_sizes(int n, int p) {
    if (p < 1) throw std::invalid_argument("turan requires p >= 1");
    if (n < 0) throw std::invalid_argument("turan requires n >= 0");
    std::vector<int> sizes;
    int big = n % p;
    for (int i = 0; i < p; ++i) {
        int s = n / p + (i < big ? 1 : 0);
        if (s > 0) sizes.push_back(s);
    }
    return sizes;
}

Graph turan(int n, int p) {
    std::vector<int> sizes = turan_part_sizes(n, p);
    if (sizes.empty()) return Graph(0);
    return complete_multipartite(sizes);
}

long long turan_edge_count(int n, int p) {
    std::vector<int> sizes = turan_part_sizes(n, p);
    long long e = static_cast<long long>(n) * (n - 1) / 2;
    for (int s : sizes) e -= static_cast<long long>(s) * (s - 1) / 2;
    return e;
}

namespace {

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, size_t idx,
               int k) {
    if (idx == order.size()) return true;
    int v = order[idx];
    std::uint64_t nb = g.neighbor_mask(v);
    // Colors used by neighbours placed so far.
    std::uint64_t used = 0;
    for (size_t i = 0; i < idx; ++i)
        if ((nb >> order[i]) & 1u) used |= 1ULL << color[order[i]];
    // Symmetry cut: never open more than one new color class at a time.
    int max_seen = 0;
    for (size_t i = 0; i < idx; ++i) max_seen = std::max(max_seen, color[order[i]] + 1);
    int limit = std::min(k, max_seen + 1);
    for (int c = 0; c < limit; ++c) {
        if ((used >> c) & 1u) continue;
        color[v] = c;
        if (colorable(g, order, color, idx + 1, k)) return true;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (g.size() == 0) return 1;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
    for (int k = 2; k <= n; ++k) {
        std::vector<int> color(n, -1);
        if (colorable(g, order, color, 0, k)) return k;
    }
    return n;
}

}  // namespace ebu
