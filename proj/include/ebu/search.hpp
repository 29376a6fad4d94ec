// Desk-scale ground truth: isomorph-free exhaustive enumeration by canonical
// edge augmentation, exact Turan numbers for tiny orders, saturation probes,
// seeded greedy lower bounds, and the structural checks behind symmetric
// blocks and the D(n,p,r) decomposition shape.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ebu/canonical.hpp"
#include "ebu/containment.hpp"
#include "ebu/graph.hpp"

namespace ebu {

inline constexpr int kEnumerationCap = 9;

// Visits every graph on exactly n vertices once per isomorphism class.
// `prune` (optional) stops descent below a graph: children of a pruned graph
// are never generated, which is sound for monotone predicates such as
// pattern containment. Returns the number of graphs visited.
std::uint64_t enumerate_graphs(int n, const std::function<bool(const Graph&)>& prune,
                               const std::function<void(const Graph&)>& visit,
                               int cap = kEnumerationCap);

std::uint64_t count_graphs_up_to_iso(int n, int cap = kEnumerationCap);

struct TuranResult {
    int n = 0;
    CanonicalCode pattern_code;
    int max_edges = -1;          // -1 when no pattern-free graph exists (never for n >= 0)
    GraphFamily witnesses;       // all extremal graphs up to isomorphism
    bool exhaustive = false;     // proof mode: full enumeration vs lower bound
};

// ex(n, pattern) by isomorph-free enumeration with containment pruning.
TuranResult ex_bruteforce(int n, const Graph& pattern, int cap = kEnumerationCap);

// Greedy randomized pattern-free graph; its edge count is a certified lower
// bound for ex(n, pattern). Deterministic for a fixed seed.
Graph random_maximal_lowerbound(int n, const Graph& pattern, std::uint64_t seed, int iters = 1);

enum class ProbeOutcome { creates, free, undecided };

struct SaturationProbe {
    int u = 0, v = 0;
    ProbeOutcome outcome = ProbeOutcome::undecided;
};

struct EdgeSample {
    bool all = true;
    int count = 0;            // used when all = false
    std::uint64_t seed = 0;   // used when all = false
};

struct SaturationReport {
    int k = 0, ell = 0, p = 0;
    int host_order = 0, host_edges = 0;
    std::vector<SaturationProbe> probes;  // ordered by (u, v)
    int creates = 0, free = 0, undecided = 0;
};

// For each sampled non-edge of g, does adding it create the blow-up of
// C_{k,l}? Outcomes are recorded data; nothing is asserted about the totals.
SaturationReport saturation_report(const Graph& g, int k, int ell, int p,
                                   const EdgeSample& sample = {}, const SearchLimits& limits = {},
                                   int threads = 1);

struct SymmetryWitness {
    std::vector<std::pair<int, int>> omega;  // h1 vertex -> h2 vertex
};

// Symmetric subgraphs: identical vertex sets, or disjoint, non-adjacent sets
// with an isomorphism preserving every adjacency to the rest of g.
std::optional<SymmetryWitness> symmetric_check(const Graph& g, std::uint64_t h1, std::uint64_t h2);

struct Decomposition {
    std::vector<int> exceptional;
    std::vector<std::vector<int>> classes;                // A_1..A_p
    std::vector<std::vector<std::vector<int>>> blocks;    // per class
    std::vector<int> w_set;                               // adjacent to all of G'
    std::vector<std::vector<int>> b_sets;                 // per class: no neighbour in A_i
};

// Tests membership in D(n,p,r): at most r omitted vertices leave a join of p
// near-equal classes, each a disjoint union of pairwise symmetric connected
// blocks. Returns the first decomposition in a fixed deterministic order.
std::optional<Decomposition> dnpr_check(const Graph& g, int p, int r);

}  // namespace ebu
