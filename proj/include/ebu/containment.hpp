// Subgraph containment (non-induced throughout): a generic backtracking
// embedder, a two-phase embedder specialized to blow-ups of lollipops, exact
// minimum vertex cover, and the counting/cover certificates that prove
// H(n,p,q)-type hosts free of a given blow-up without any search.
//
// Searches never fail silently: exceeding the node budget yields an explicit
// `undecided`, and every witness is re-verified edge by edge before being
// returned.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ebu/constructions.hpp"
#include "ebu/graph.hpp"

namespace ebu {

enum class Outcome { found, absent, undecided };

struct SearchLimits {
    std::uint64_t max_nodes = 50'000'000;
};

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

struct ContainmentResult {
    Outcome outcome = Outcome::undecided;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

ContainmentResult subgraph_contains(const Graph& host, const Graph& pattern,
                                    const SearchLimits& limits = {});

// Independent witness checker: injectivity plus every pattern edge on a host
// edge.
bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

// Witness that a host contains the blow-up of C_{k,l} into (p+1)-cliques:
// images of the k+l lollipop vertices (labelled as in lollipop()) plus, for
// each lollipop edge, the p-1 extra vertices completing its clique. All
// images are pairwise distinct.
struct BlowupEmbedding {
    std::vector<int> base_map;
    std::vector<std::vector<int>> apex_sets;  // indexed like lollipop_edge_order()
};

struct BlowupContainmentResult {
    Outcome outcome = Outcome::undecided;
    std::optional<BlowupEmbedding> embedding;
    std::uint64_t nodes = 0;
};

// Edge order used by apex_sets: the k cycle edges from the center, then the
// l path edges outward.
std::vector<std::pair<int, int>> lollipop_edge_order(int k, int ell);

BlowupContainmentResult blowup_contains(const Graph& host, int k, int ell, int p,
                                        const SearchLimits& limits = {});

bool verify_blowup_embedding(const Graph& host, int k, int ell, int p, const BlowupEmbedding& e);

struct VertexCover {
    int size = 0;
    std::uint64_t vertices = 0;
};

// Exact minimum vertex cover by branch and bound on a maximum-degree vertex.
VertexCover min_vertex_cover(const Graph& g, int cap = 24);

// Search-free proof that realize(spec) cannot contain the blow-up of C_{k,l}:
// either too few cliques can meet the dominating set Q (counting case), or Q
// is smaller than the lollipop's minimum vertex cover (cover case). Absent
// when the applicable inequality fails, which does NOT imply containment.
enum class CertificateKind { clique_budget, vertex_cover };

struct FreenessCertificate {
    ConstructionSpec host_spec;
    CertificateKind kind = CertificateKind::clique_budget;
    int clique_budget = 0;  // counting case: cliques that can meet Q
    int demand = 0;         // counting case: cliques the blow-up needs (= k+l)
    int q_size = 0;         // cover case: |Q| = q-1
    int cover_bound = 0;    // cover case: minimum vertex cover of C_{k,l}
};

std::optional<FreenessCertificate> freeness_certificate(const ConstructionSpec& spec, int k,
                                                        int ell, int p);

}  // namespace ebu
