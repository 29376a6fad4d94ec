// The edge blow-up operator, vertex splitting, the three split families, and
// brute-forced decomposition families.
#pragma once

#include <cstdint>
#include <vector>

#include "ebu/canonical.hpp"
#include "ebu/containment.hpp"
#include "ebu/graph.hpp"

namespace ebu {

// Blow-up of every edge of `base` into a clique of order p+1. Base vertices
// keep their labels; edge i of base.edge_list() gets the p-1 fresh vertices
// base.order() + i*(p-1) ... base.order() + (i+1)*(p-1) - 1.
struct BlowupResult {
    Graph graph;
    std::vector<int> base_map;                  // base vertex -> blow-up vertex (identity)
    std::vector<std::vector<int>> edge_cliques;  // fresh vertices per base edge
};

BlowupResult blowup(const Graph& base, int p);

// Splitting one vertex v (degree >= 2): v is replaced by deg(v) fresh leaves,
// each keeping exactly one of v's edges. Splitting a set applies this to each
// member; the result does not depend on the order, and edges inside U turn
// into isolated P_2 components.
Graph vertex_split(const Graph& base, std::uint64_t u_set);

enum class SplitMode { all, independent, chi_bound };

// The family of graphs obtained by splitting admissible subsets U, up to
// isomorphism. Modes: every U; U independent in base; chi(base[U]) <= p.
// Every vertex of U must have degree >= 2.
GraphFamily split_family(const Graph& base, SplitMode mode, int p = 0, int max_base_order = 12);

// Is L a subgraph of (M + I_t) joined with K_{p-1}(t,...,t)?
ContainmentResult decomposition_member_check(const Graph& m, const Graph& l, int p, int t,
                                             const SearchLimits& limits = {});

struct DecompositionFamilyResult {
    GraphFamily family;
    bool partial = false;  // some membership check came back undecided
};

// All minimal graphs M (up to max_m_vertices, no isolated vertices, up to
// isomorphism) with L a subgraph of (M + I_t) joined with K_{p-1}(t,...,t)
// for some t <= t_max. Membership is monotone in t, so only t_max is probed;
// minimality is re-verified against every single edge and vertex deletion.
DecompositionFamilyResult decomposition_family_bruteforce(const Graph& l, int p,
                                                          int max_m_vertices, int t_max,
                                                          const SearchLimits& limits = {});

}  // namespace ebu
