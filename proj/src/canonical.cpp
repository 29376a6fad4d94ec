#include "ebu/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace ebu {

namespace {

// Equitable refinement of an ordered colouring. Colours are 0..c-1 and the
// colour value fixes the cell order; splitting keeps a cell's fragments
// adjacent and orders them by neighbour-colour counts, so the result depends
// only on the isomorphism type and the cells already distinguished.
void refine_colors(const Graph& g, std::vector<int>& color) {
    const int n = g.order();
    if (n == 0) return;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> idx(n);
    for (;;) {
        int ncolors = 1 + *std::max_element(color.begin(), color.end());
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.assign(1 + ncolors, 0);
            s[0] = color[v];
            std::uint64_t nb = g.neighbor_mask(v);
            while (nb) {
                int u = __builtin_ctzll(nb);
                nb &= nb - 1;
                ++s[1 + color[u]];
            }
        }
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return sig[a] != sig[b] ? sig[a] < sig[b] : a < b;
        });
        int next = 0;
        std::vector<int> fresh(n);
        fresh[idx[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[idx[i]] != sig[idx[i - 1]]) ++next;
            fresh[idx[i]] = next;
        }
        if (next + 1 == ncolors) {
            color = std::move(fresh);
            return;
        }
        color = std::move(fresh);
    }
}

std::vector<std::uint64_t> pack_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::vector<std::uint64_t> words((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    size_t bit = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = g.neighbor_mask(perm[i]);
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((row >> perm[j]) & 1u) words[bit / 64] |= 1ULL << (63 - bit % 64);
    }
    return words;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<int> color(n_, 0);
        std::vector<int> prefix;
        descend(std::move(color), prefix);
        return best_perm_;
    }

    std::vector<std::uint64_t> best_code() && { return std::move(best_code_); }

private:
    void descend(std::vector<int> color, std::vector<int>& prefix) {
        refine_colors(g_, color);
        int ncolors = 1 + *std::max_element(color.begin(), color.end());
        if (ncolors == n_) {
            leaf(color);
            return;
        }
        // Branch on the first smallest non-singleton cell.
        std::vector<int> count(ncolors, 0);
        for (int v = 0; v < n_; ++v) ++count[color[v]];
        int cell = -1;
        for (int c = 0; c < ncolors; ++c)
            if (count[c] > 1 && (cell < 0 || count[c] < count[cell])) cell = c;
        std::vector<int> members;
        for (int v = 0; v < n_; ++v)
            if (color[v] == cell) members.push_back(v);

        std::vector<int> tried;
        for (int v : members) {
            if (!tried.empty() && orbit_pruned(v, tried, prefix)) continue;
            tried.push_back(v);
            prefix.push_back(v);
            descend(individualize(color, v), prefix);
            prefix.pop_back();
        }
    }

    static std::vector<int> individualize(const std::vector<int>& color, int v) {
        // Place v in a fresh cell just before the rest of its old cell.
        std::vector<int> next(color.size());
        for (size_t u = 0; u < color.size(); ++u) next[u] = 2 * color[u] + 1;
        next[v] -= 1;
        return next;
    }

    void leaf(const std::vector<int>& color) {
        std::vector<int> perm(n_);
        for (int v = 0; v < n_; ++v) perm[color[v]] = v;
        std::vector<std::uint64_t> code = pack_code(g_, perm);
        if (!have_best_ || code < best_code_) {
            best_code_ = std::move(code);
            best_perm_ = std::move(perm);
            have_best_ = true;
        } else if (code == best_code_) {
            // Equal codes expose an automorphism: position i holds
            // best_perm_[i] in one labelling and perm[i] in the other.
            std::vector<int> gamma(n_);
            for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = perm[i];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    // Skip branch v if some earlier sibling lies in the same orbit of the
    // subgroup generated by automorphisms fixing the individualized prefix.
    bool orbit_pruned(int v, const std::vector<int>& tried, const std::vector<int>& prefix) {
        if (automorphisms_.empty()) return false;
        DisjointSet ds(n_);
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int x : prefix)
                if (gamma[x] != x) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < n_; ++u) ds.unite(u, gamma[u]);
        }
        for (int w : tried)
            if (ds.find(w) == ds.find(v)) return true;
        return false;
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<int> best_perm_;
    std::vector<std::uint64_t> best_code_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

// Disconnected graphs are canonicalized per component and concatenated in
// sorted component-code order; the inter-component bits are all zero, so the
// packed whole-graph code is still a complete isomorphism invariant.
std::pair<std::vector<int>, CanonicalCode> canonical_labeling_with_code(const Graph& g) {
    std::vector<std::uint64_t> comps = g.components();
    if (comps.size() <= 1) {
        CanonSearch search(g);
        std::vector<int> perm = search.run();
        return {std::move(perm), CanonicalCode{g.order(), std::move(search).best_code()}};
    }
    struct Part {
        CanonicalCode code;
        std::vector<int> perm;  // canonical position -> original vertex
    };
    std::vector<Part> parts;
    parts.reserve(comps.size());
    for (std::uint64_t mask : comps) {
        std::vector<int> orig;
        for (int v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1u) orig.push_back(v);
        Graph sub = g.induced(mask);
        CanonSearch search(sub);
        std::vector<int> local = search.run();
        Part part{CanonicalCode{sub.order(), std::move(search).best_code()}, {}};
        part.perm.reserve(local.size());
        for (int pos : local) part.perm.push_back(orig[pos]);
        parts.push_back(std::move(part));
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Part& a, const Part& b) { return a.code < b.code; });
    std::vector<int> perm;
    perm.reserve(g.order());
    for (const Part& part : parts) perm.insert(perm.end(), part.perm.begin(), part.perm.end());
    return {std::move(perm), CanonicalCode{g.order(), pack_code(g, perm)}};
}

std::vector<int> canonical_labeling(const Graph& g) {
    return canonical_labeling_with_code(g).first;
}

CanonicalCode canonical_form(const Graph& g) {
    return canonical_labeling_with_code(g).second;
}

Graph canonical_representative(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
    return g.permuted(pos);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

bool GraphFamily::insert(const Graph& g) {
    return members_.emplace(canonical_form(g), g).second;
}

std::vector<Graph> GraphFamily::members() const {
    std::vector<Graph> out;
    out.reserve(members_.size());
    for (const auto& [code, g] : members_) out.push_back(g);
    return out;
}

std::vector<CanonicalCode> GraphFamily::codes() const {
    std::vector<CanonicalCode> out;
    out.reserve(members_.size());
    for (const auto& [code, g] : members_) out.push_back(code);
    return out;
}

bool GraphFamily::is_subfamily_of(const GraphFamily& other) const {
    for (const auto& [code, g] : members_)
        if (!other.members_.count(code)) return false;
    return true;
}

}  // namespace ebu
