#include "ebu/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace ebu {

LollipopParams::LollipopParams(int k_, int ell_) : k(k_), ell(ell_) {
    if (k < 3) throw std::invalid_argument("lollipop requires cycle length k >= 3");
    if (ell < 1) throw std::invalid_argument("lollipop requires path length l >= 1");
}

Graph lollipop(int k, int ell) {
    LollipopParams params(k, ell);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(k - 1, 0);
    edges.emplace_back(0, k);
    for (int i = k; i + 1 < k + ell; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(params.order(), edges);
}

GraphFamily y_family(int k, int ell) {
    if (k < 2) throw std::invalid_argument("y_family requires k >= 2 (a path with internal vertices)");
    if (ell < 1) throw std::invalid_argument("y_family requires l >= 1");
    GraphFamily family;
    for (int at = 1; at < k; ++at) {
        // Path 0..k plus a path of ell fresh vertices hanging off `at`.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(at, k + 1);
        for (int i = k + 1; i < k + ell; ++i) edges.emplace_back(i, i + 1);
        family.insert(Graph::from_edge_list(k + ell + 1, edges));
    }
    return family;
}

std::string ConstructionSpec::label() const {
    std::ostringstream os;
    switch (variant) {
        case Variant::H: os << "H(" << n << "," << p << "," << q << ")"; break;
        case Variant::Hprime: os << "H'(" << n << "," << p << "," << q << ")"; break;
        case Variant::Hstar: os << "H*(" << n << ")"; break;
        case Variant::TuranOnly: os << "T_" << p << "(" << n << ")"; break;
        case Variant::JoinFamily: {
            os << "(";
            bool first = true;
            auto piece = [&](int count, const std::string& what) {
                if (count <= 0) return;
                if (!first) os << " u ";
                os << count << what;
                first = false;
            };
            if (layout.star_leaves >= 0) {
                os << "S_" << layout.star_leaves;
                first = false;
            }
            piece(layout.triangles, "K3");
            piece(layout.single_edges, "P2");
            piece(layout.single_vertices, "P1");
            os << ") v I_" << layout.right;
            break;
        }
    }
    return os.str();
}

namespace {

int join_layout_left_order(const JoinLayout& l) {
    int left = 3 * l.triangles + 2 * l.single_edges + l.single_vertices;
    if (l.star_leaves >= 0) left += l.star_leaves + 1;
    return left;
}

}  // namespace

void validate(const ConstructionSpec& spec) {
    switch (spec.variant) {
        case Variant::H:
        case Variant::Hprime:
            if (spec.p < 1) throw std::invalid_argument(spec.label() + ": p must be >= 1");
            if (spec.q < 1 || spec.q > spec.n)
                throw std::invalid_argument(spec.label() + ": q must be in [1, n]");
            if (spec.variant == Variant::Hprime) {
                int first_class = (spec.n - spec.q + 1 + spec.p - 1) / spec.p;
                if (first_class < 2)
                    throw std::invalid_argument(spec.label() + ": no class large enough for the extra edge");
            }
            break;
        case Variant::Hstar:
            if (spec.n < 2) throw std::invalid_argument(spec.label() + ": H* requires n >= 2");
            break;
        case Variant::TuranOnly:
            if (spec.p < 1) throw std::invalid_argument(spec.label() + ": p must be >= 1");
            if (spec.n < 0) throw std::invalid_argument(spec.label() + ": n must be >= 0");
            break;
        case Variant::JoinFamily: {
            const JoinLayout& l = spec.layout;
            if (l.triangles < 0 || l.single_edges < 0 || l.single_vertices < 0 || l.right < 0 ||
                l.star_leaves < -1)
                throw std::invalid_argument(spec.label() + ": negative layout counts");
            if (join_layout_left_order(l) + l.right != spec.n)
                throw std::invalid_argument(spec.label() + ": layout orders do not sum to n");
            if (join_layout_left_order(l) == 0)
                throw std::invalid_argument(spec.label() + ": empty join side");
            break;
        }
    }
}

Graph realize(const ConstructionSpec& spec) {
    validate(spec);
    switch (spec.variant) {
        case Variant::H:
        case Variant::Hprime: {
            Graph core = turan(spec.n - spec.q + 1, spec.p);
            Graph g = spec.q > 1 ? join(complete(spec.q - 1), core) : core;
            if (spec.variant == Variant::Hprime) {
                // One extra edge between the two lowest labels of the first
                // (largest) class, which sits right after the clique.
                g = g.with_edge(spec.q - 1, spec.q);
            }
            return g;
        }
        case Variant::Hstar: {
            int a = (spec.n + 1) / 2, b = spec.n / 2;
            Graph g = complete_multipartite({a, b});
            auto add_matching = [&](int begin, int size) {
                int start = size % 2;  // lowest label left unmatched in an odd class
                for (int i = start; i + 1 < size; i += 2) g = g.with_edge(begin + i, begin + i + 1);
            };
            add_matching(0, a);
            add_matching(a, b);
            return g;
        }
        case Variant::TuranOnly:
            return turan(spec.n, spec.p);
        case Variant::JoinFamily: {
            const JoinLayout& l = spec.layout;
            Graph left(0);
            bool started = false;
            auto append = [&](const Graph& piece) {
                left = started ? disjoint_union(left, piece) : piece;
                started = true;
            };
            if (l.star_leaves > 0) append(star(l.star_leaves));
            else if (l.star_leaves == 0) append(independent(1));
            for (int i = 0; i < l.triangles; ++i) append(complete(3));
            for (int i = 0; i < l.single_edges; ++i) append(path(2));
            for (int i = 0; i < l.single_vertices; ++i) append(independent(1));
            return l.right > 0 ? join(left, independent(l.right)) : left;
        }
    }
    throw std::logic_error("unreachable");
}

long long edge_count_formula(const ConstructionSpec& spec) {
    validate(spec);
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    switch (spec.variant) {
        case Variant::H:
        case Variant::Hprime: {
            long long rest = spec.n - spec.q + 1;
            long long e = c2(spec.q - 1) + static_cast<long long>(spec.q - 1) * rest +
                          turan_edge_count(spec.n - spec.q + 1, spec.p);
            return spec.variant == Variant::Hprime ? e + 1 : e;
        }
        case Variant::Hstar: {
            long long a = (spec.n + 1) / 2, b = spec.n / 2;
            return a * b + a / 2 + b / 2;
        }
        case Variant::TuranOnly:
            return turan_edge_count(spec.n, spec.p);
        case Variant::JoinFamily: {
            const JoinLayout& l = spec.layout;
            long long left_edges = 3LL * l.triangles + l.single_edges +
                                   (l.star_leaves >= 0 ? l.star_leaves : 0);
            return left_edges + static_cast<long long>(join_layout_left_order(l)) * l.right;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// The four tying families at p = 2, k = 3, l = 1, selected by n.
std::vector<ConstructionSpec> keyring_tie_family(int n) {
    std::vector<ConstructionSpec> specs;
    const int half_up = (n + 1) / 2, half_down = n / 2;
    auto triangles_only = [&]() {
        JoinLayout l;
        l.triangles = half_up / 3;
        l.right = half_down;
        return ConstructionSpec::join_family(n, l);
    };
    if (n % 12 == 0) {
        specs.push_back(triangles_only());
        specs.push_back(ConstructionSpec::hstar(n));
    } else if (n % 6 != 0 && n % 4 == 0) {
        specs.push_back(ConstructionSpec::hstar(n));
    } else if (n % 4 != 0 && half_up % 3 == 0) {
        specs.push_back(triangles_only());
    } else {
        // k1 is forced by 1 <= half_up - 3*k1 <= 2.
        for (int s = 1; s <= 2; ++s) {
            if ((half_up - s) % 3 != 0) continue;
            int k1 = (half_up - s) / 3;
            if (k1 < 0) continue;
            JoinLayout l;
            l.triangles = k1;
            l.single_edges = half_up - 3 * k1 - 1;
            l.single_vertices = 3 * k1 + 2 - half_up;
            l.right = half_down;
            specs.push_back(ConstructionSpec::join_family(n, l));
        }
        specs.push_back(ConstructionSpec::hstar(n));
        for (int k2 = 0; 3 * k2 + 1 <= half_up; ++k2) {
            JoinLayout l;
            l.star_leaves = half_up - 3 * k2 - 1;
            l.triangles = k2;
            l.right = n - half_up;  // I_ceil((n-1)/2)
            specs.push_back(ConstructionSpec::join_family(n, l));
        }
    }
    return specs;
}

}  // namespace

Prediction predicted_extremal(int k, int ell, int p, int n) {
    if (k < 3) throw std::invalid_argument("predicted_extremal requires k >= 3");
    if (ell < 1) throw std::invalid_argument("predicted_extremal requires l >= 1");
    if (p < 2) throw std::invalid_argument("predicted_extremal requires p >= 2");
    const int t = LollipopParams(k, ell).t();
    const bool k_odd = k % 2 == 1, l_odd = ell % 2 == 1;

    if (ell == 1) {
        const int q0 = (k - 1) / 2 + 1;
        if (!(p == 2 && k == 3)) {
            auto spec = k_odd ? ConstructionSpec::h(n, p, q0) : ConstructionSpec::hprime(n, p, q0);
            return {{spec}, true, "k >= 3, l = 1, (p,k) != (2,3)"};
        }
        return {keyring_tie_family(n), true, "p = 2, k = 3, l = 1 tie family"};
    }

    if (p == 2) {
        if (k == 3) {
            auto spec = l_odd ? ConstructionSpec::h(n, 2, t + 1) : ConstructionSpec::h(n, 2, t + 2);
            return {{spec}, true, "p = 2, k = 3, l >= 2"};
        }
        if (l_odd) {
            auto spec = k_odd ? ConstructionSpec::h(n, 2, t + 1) : ConstructionSpec::hprime(n, 2, t + 1);
            return {{spec}, true, "p = 2, k >= 4, l odd"};
        }
        return {{ConstructionSpec::h(n, 2, t + 2)}, true, "p = 2, k >= 4, l even"};
    }

    if (p == 3 && k_odd) {
        auto spec = l_odd ? ConstructionSpec::h(n, 3, t + 1) : ConstructionSpec::h(n, 3, t + 2);
        return {{spec}, true, "p = 3, k odd, l >= 2"};
    }
    if (p >= 3 && !k_odd) {
        auto spec = l_odd ? ConstructionSpec::hprime(n, p, t + 1) : ConstructionSpec::h(n, p, t + 2);
        return {{spec}, true, "p >= 3, k even, l >= 2"};
    }
    if (p >= 4 && k_odd) {
        auto spec = l_odd ? ConstructionSpec::h(n, p, t + 1) : ConstructionSpec::h(n, p, t + 2);
        return {{spec}, true, "p >= 4, k odd, l >= 2"};
    }
    return {{}, false, "no covering result for these parameters"};
}

}  // namespace ebu
