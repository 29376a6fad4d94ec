// Canonical labelling by individualization-refinement with automorphism
// pruning. Two graphs receive equal codes exactly when they are isomorphic;
// the brute-force oracle for that claim lives in the test suite.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ebu/graph.hpp"

namespace ebu {

// Total-order key for an isomorphism class: order plus the upper-triangle
// adjacency bits of the canonically labelled graph, packed MSB-first.
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalCode&) const = default;
};

// Permutation perm with perm[i] = vertex of g placed at canonical position i.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalCode canonical_form(const Graph& g);

// Both results of one search run.
std::pair<std::vector<int>, CanonicalCode> canonical_labeling_with_code(const Graph& g);

// The canonically labelled representative of g's isomorphism class.
Graph canonical_representative(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// A set of graphs with no two members isomorphic, iterated in code order.
class GraphFamily {
public:
    // True if g was new (no isomorphic member present).
    bool insert(const Graph& g);

    bool contains(const Graph& g) const { return members_.count(canonical_form(g)) > 0; }
    bool contains_code(const CanonicalCode& code) const { return members_.count(code) > 0; }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::vector<Graph> members() const;
    std::vector<CanonicalCode> codes() const;

    bool is_subfamily_of(const GraphFamily& other) const;
    bool operator==(const GraphFamily& other) const { return codes() == other.codes(); }

private:
    std::map<CanonicalCode, Graph> members_;
};

}  // namespace ebu
