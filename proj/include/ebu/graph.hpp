// Simple undirected graph on dense labels 0..n-1, adjacency kept as one
// 64-bit neighbour mask per vertex. Graphs are immutable after construction;
// all combinators return fresh graphs, so values can be shared freely across
// threads.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ebu {

inline constexpr int kMaxVertices = 64;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<size_t>(n), 0) {}

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int order() const { return n_; }

    // Number of edges.
    int size() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return __builtin_popcountll(adj_[v]);
    }

    std::uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    }

    // Edges in lexicographic order (u < v).
    std::vector<std::pair<int, int>> edge_list() const;

    std::vector<int> degrees() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // Subgraph induced by the vertices in `keep`, relabelled densely with the
    // original vertex order preserved.
    Graph induced(std::uint64_t keep) const;

    // Relabel: vertex v of *this becomes perm[v] of the result.
    Graph permuted(const std::vector<int>& perm) const;

    // Vertex masks of the connected components, ordered by least vertex.
    std::vector<std::uint64_t> components() const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in [0, " +
                                        std::to_string(kMaxVertices) + "], got " + std::to_string(n));
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Named basic graphs. Order conventions: path(n) and cycle(n) have n
// vertices, star(n) has n+1 vertices (n leaves), matching(k) has 2k vertices
// and k disjoint edges.
enum class BasicKind { path, cycle, star, complete, independent, matching };

Graph make_basic(BasicKind kind, int size);

Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete(int n);
Graph independent(int n);
Graph matching(int k);

// Disjoint union; vertices of h are relabelled by offset g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph copies(int k, const Graph& h);

// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

// Complete multipartite graph with the given part sizes; part i occupies a
// contiguous label range, parts in the order given.
Graph complete_multipartite(const std::vector<int>& sizes);

// Turan graph T_p(n): complete p-partite, parts as equal as possible, the
// n mod p parts of size ceil(n/p) listed first.
std::vector<int> turan_part_sizes(int n, int p);
Graph turan(int n, int p);
long long turan_edge_count(int n, int p);

// Exact chromatic number by backtracking; intended for small graphs (n <= 16
// unless you can wait).
int chromatic_number(const Graph& g);

}  // namespace ebu
