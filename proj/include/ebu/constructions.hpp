// The named candidate constructions: lollipops C_{k,l}, the family Y_{k+1,l+1}
// of paths with one attached path, the dominated-Turan graphs H(n,p,q) and
// H'(n,p,q), the matched complete-bipartite graph H*(n), and the join
// families that tie with H*(n) at p = 2, k = 3, l = 1. predicted_extremal
// dispatches (k, l, p) to the construction expected to be extremal.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebu/canonical.hpp"
#include "ebu/graph.hpp"

namespace ebu {

struct LollipopParams {
    int k;    // cycle length, >= 3
    int ell;  // pendant path edge-length, >= 1

    LollipopParams(int k_, int ell_);

    // t = floor((k-1)/2) + floor((l-1)/2).
    int t() const { return (k - 1) / 2 + (ell - 1) / 2; }
    // Order of the blow-up of C_{k,l} into (p+1)-cliques.
    int m(int p) const { return (k + ell) * p; }
    int order() const { return k + ell; }
};

// Lollipop C_{k,l}: cycle labelled 0..k-1 (center 0), pendant path
// k..k+l-1 hanging off the center.
Graph lollipop(int k, int ell);

// All graphs from a path of k edges with a path of l edges attached at an
// internal vertex, up to isomorphism.
GraphFamily y_family(int k, int ell);

enum class Variant { H, Hprime, Hstar, TuranOnly, JoinFamily };

// Left side of a JoinFamily construction: triangles + single edges + single
// vertices + an optional star, joined to an independent set of size `right`.
struct JoinLayout {
    int triangles = 0;
    int single_edges = 0;
    int single_vertices = 0;
    int star_leaves = -1;  // -1 means no star component
    int right = 0;

    bool operator==(const JoinLayout&) const = default;
};

struct ConstructionSpec {
    Variant variant = Variant::H;
    int n = 0;
    int p = 0;
    int q = 0;
    JoinLayout layout{};

    static ConstructionSpec h(int n, int p, int q) { return {Variant::H, n, p, q, {}}; }
    static ConstructionSpec hprime(int n, int p, int q) { return {Variant::Hprime, n, p, q, {}}; }
    static ConstructionSpec hstar(int n) { return {Variant::Hstar, n, 0, 0, {}}; }
    static ConstructionSpec turan_only(int n, int p) { return {Variant::TuranOnly, n, p, 0, {}}; }
    static ConstructionSpec join_family(int n, JoinLayout layout) {
        return {Variant::JoinFamily, n, 0, 0, layout};
    }

    std::string label() const;

    bool operator==(const ConstructionSpec&) const = default;
};

// Throws std::invalid_argument when the parameters violate the variant's
// constraints (q out of [1, n], H* with n < 2, layout orders that do not sum
// to n, ...).
void validate(const ConstructionSpec& spec);

Graph realize(const ConstructionSpec& spec);

// Closed-form edge count; equals realize(spec).size() for every valid spec.
long long edge_count_formula(const ConstructionSpec& spec);

// The construction(s) predicted extremal for C_{k,l}^{p+1} at order n, with
// the parameter range that justifies them. Empty specs + covered = false
// marks a parameter cell the known results do not reach.
struct Prediction {
    std::vector<ConstructionSpec> specs;
    bool covered = false;
    std::string range;  // human-readable tag of the covering result
};

Prediction predicted_extremal(int k, int ell, int p, int n);

}  // namespace ebu
