#include "ebu/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "ebu/constructions.hpp"

namespace ebu {

namespace {

// The edge of g mapped to the least canonical position pair.
std::pair<int, int> canonical_deletion_edge(const Graph& g, const std::vector<int>& perm,
                                            const CanonicalCode& code) {
    size_t bit = 0;
    for (const std::uint64_t word : code.bits) {
        if (word == 0) {
            bit += 64;
            continue;
        }
        bit += __builtin_clzll(word);
        break;
    }
    // Decode the row-major pair index.
    const int n = g.order();
    size_t idx = bit;
    for (int i = 0; i < n; ++i) {
        size_t row = static_cast<size_t>(n - 1 - i);
        if (idx < row) return {perm[i], perm[i + 1 + idx]};
        idx -= row;
    }
    throw std::logic_error("canonical_deletion_edge called on an edgeless graph");
}

std::uint64_t enumerate_from(const Graph& g, const CanonicalCode& code,
                             const std::function<bool(const Graph&)>& prune,
                             const std::function<void(const Graph&)>& visit) {
    visit(g);
    std::uint64_t visited = 1;
    const int n = g.order();
    std::vector<CanonicalCode> child_codes;  // local dedup among this node's children
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Graph child = g.with_edge(u, v);
            if (prune && prune(child)) continue;
            auto [perm, child_code] = canonical_labeling_with_code(child);
            auto [du, dv] = canonical_deletion_edge(child, perm, child_code);
            if (canonical_form(child.without_edge(du, dv)) != code) continue;
            if (std::find(child_codes.begin(), child_codes.end(), child_code) != child_codes.end())
                continue;
            child_codes.push_back(child_code);
            visited += enumerate_from(child, child_code, prune, visit);
        }
    }
    return visited;
}

}  // namespace

std::uint64_t enumerate_graphs(int n, const std::function<bool(const Graph&)>& prune,
                               const std::function<void(const Graph&)>& visit, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs requires n >= 1");
    if (n > cap)
        throw std::invalid_argument("enumerate_graphs: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    Graph root(n);
    if (prune && prune(root)) return 0;
    return enumerate_from(root, canonical_form(root), prune, visit);
}

std::uint64_t count_graphs_up_to_iso(int n, int cap) {
    return enumerate_graphs(n, nullptr, [](const Graph&) {}, cap);
}

TuranResult ex_bruteforce(int n, const Graph& pattern, int cap) {
    TuranResult result;
    result.n = n;
    result.pattern_code = canonical_form(pattern);
    result.exhaustive = true;

    auto contains = [&](const Graph& g) {
        auto r = subgraph_contains(g, pattern);
        if (r.outcome == Outcome::undecided)
            throw std::logic_error("ex_bruteforce: containment search exhausted its budget");
        return r.outcome == Outcome::found;
    };
    enumerate_graphs(
        n, contains,
        [&](const Graph& g) {
            int e = g.size();
            if (e > result.max_edges) {
                result.max_edges = e;
                result.witnesses = GraphFamily{};
            }
            if (e == result.max_edges) result.witnesses.insert(g);
        },
        cap);
    return result;
}

Graph random_maximal_lowerbound(int n, const Graph& pattern, std::uint64_t seed, int iters) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("random_maximal_lowerbound: bad n");
    if (iters < 1) throw std::invalid_argument("random_maximal_lowerbound: iters must be >= 1");
    if (pattern.size() == 0 && pattern.order() <= n)
        throw std::invalid_argument("random_maximal_lowerbound: edgeless patterns have no free host");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::mt19937_64 rng(seed);
    Graph best(n);
    for (int iter = 0; iter < iters; ++iter) {
        std::vector<std::pair<int, int>> order = pairs;
        std::shuffle(order.begin(), order.end(), rng);
        Graph g(n);
        for (auto [u, v] : order) {
            Graph candidate = g.with_edge(u, v);
            if (subgraph_contains(candidate, pattern).outcome != Outcome::found) g = candidate;
        }
        if (g.size() > best.size()) best = g;
    }
    return best;
}

SaturationReport saturation_report(const Graph& g, int k, int ell, int p, const EdgeSample& sample,
                                   const SearchLimits& limits, int threads) {
    SaturationReport report;
    report.k = k;
    report.ell = ell;
    report.p = p;
    report.host_order = g.order();
    report.host_edges = g.size();

    std::vector<std::pair<int, int>> probes;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) probes.emplace_back(u, v);
    if (!sample.all && static_cast<int>(probes.size()) > sample.count) {
        std::mt19937_64 rng(sample.seed);
        std::shuffle(probes.begin(), probes.end(), rng);
        probes.resize(sample.count);
        std::sort(probes.begin(), probes.end());
    }

    report.probes.resize(probes.size());
    auto run_range = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            auto [u, v] = probes[i];
            auto r = blowup_contains(g.with_edge(u, v), k, ell, p, limits);
            ProbeOutcome outcome = r.outcome == Outcome::found    ? ProbeOutcome::creates
                                   : r.outcome == Outcome::absent ? ProbeOutcome::free
                                                                  : ProbeOutcome::undecided;
            report.probes[i] = {u, v, outcome};
        }
    };
    threads = std::max(1, threads);
    if (threads == 1 || probes.size() < 2) {
        run_range(0, probes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (probes.size() + threads - 1) / threads;
        for (size_t begin = 0; begin < probes.size(); begin += chunk)
            pool.emplace_back(run_range, begin, std::min(begin + chunk, probes.size()));
        for (auto& t : pool) t.join();
    }
    for (const auto& probe : report.probes) {
        if (probe.outcome == ProbeOutcome::creates) ++report.creates;
        else if (probe.outcome == ProbeOutcome::free) ++report.free;
        else ++report.undecided;
    }
    return report;
}

std::optional<SymmetryWitness> symmetric_check(const Graph& g, std::uint64_t h1, std::uint64_t h2) {
    h1 &= g.vertex_mask();
    h2 &= g.vertex_mask();
    if (h1 == h2) {
        SymmetryWitness w;
        for (int v = 0; v < g.order(); ++v)
            if ((h1 >> v) & 1u) w.omega.emplace_back(v, v);
        return w;
    }
    if (h1 & h2) throw std::invalid_argument("symmetric_check: sets must be disjoint or identical");
    if (__builtin_popcountll(h1) != __builtin_popcountll(h2)) return std::nullopt;

    std::vector<int> a, b;
    for (int v = 0; v < g.order(); ++v) {
        if ((h1 >> v) & 1u) a.push_back(v);
        if ((h2 >> v) & 1u) b.push_back(v);
    }
    // No edges between the copies.
    for (int x : a)
        if (g.neighbor_mask(x) & h2) return std::nullopt;

    const std::uint64_t outside = g.vertex_mask() & ~h1 & ~h2;
    // omega must preserve internal adjacency and the exact outside
    // neighbourhood of every vertex.
    std::vector<int> image(a.size(), -1);
    std::uint64_t used = 0;
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (i == a.size()) return true;
        int x = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            int y = b[j];
            if ((used >> j) & 1u) continue;
            if ((g.neighbor_mask(x) & outside) != (g.neighbor_mask(y) & outside)) continue;
            bool consistent = true;
            for (size_t k = 0; k < i && consistent; ++k)
                if (g.has_edge(a[k], x) != g.has_edge(b[image[k]], y)) consistent = false;
            if (!consistent) continue;
            image[i] = static_cast<int>(j);
            used |= 1ULL << j;
            if (assign(i + 1)) return true;
            used &= ~(1ULL << j);
            image[i] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    SymmetryWitness w;
    for (size_t i = 0; i < a.size(); ++i) w.omega.emplace_back(a[i], b[image[i]]);
    return w;
}

namespace {

std::vector<std::uint64_t> complement_components(const Graph& g, std::uint64_t rest) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!((rest >> v) & 1u) || ((seen >> v) & 1u)) continue;
        std::uint64_t comp = 1ULL << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = ~g.neighbor_mask(u) & rest & ~comp & ~(1ULL << u);
            comp |= fresh;
            frontier |= fresh;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

std::vector<std::uint64_t> class_blocks(const Graph& g, std::uint64_t cls) {
    std::vector<std::uint64_t> blocks;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!((cls >> v) & 1u) || ((seen >> v) & 1u)) continue;
        std::uint64_t comp = 1ULL << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = g.neighbor_mask(u) & cls & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        blocks.push_back(comp);
        seen |= comp;
    }
    return blocks;
}

bool blocks_pairwise_symmetric(const Graph& g, const std::vector<std::uint64_t>& blocks) {
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            if (__builtin_popcountll(blocks[i]) != __builtin_popcountll(blocks[j])) return false;
            if (!symmetric_check(g, blocks[i], blocks[j])) return false;
        }
    return true;
}

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

struct DnprSearcher {
    const Graph& g;
    int p, r, n;

    // Assign complement components to at most p classes, first component to
    // class 0, new classes opened in order; prune classes that already
    // overflow the allowed size.
    bool assign(const std::vector<std::uint64_t>& comps, size_t idx,
                std::vector<std::uint64_t>& classes) {
        if (idx == comps.size()) {
            if (static_cast<int>(classes.size()) != p) return false;
            for (std::uint64_t cls : classes) {
                int sz = __builtin_popcountll(cls);
                if (std::abs(sz * p - n) > r * p) return false;
                if (!blocks_pairwise_symmetric(g, class_blocks(g, cls))) return false;
            }
            return true;
        }
        int max_size = (n + r * p) / p;
        size_t limit = std::min(classes.size() + 1, static_cast<size_t>(p));
        for (size_t c = 0; c < limit; ++c) {
            bool fresh = c == classes.size();
            if (fresh) classes.push_back(0);
            int sz = __builtin_popcountll(classes[c] | comps[idx]);
            if (sz <= max_size) {
                std::uint64_t save = classes[c];
                classes[c] |= comps[idx];
                if (assign(comps, idx + 1, classes)) return true;
                classes[c] = save;
            }
            if (fresh) classes.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<Decomposition> dnpr_check(const Graph& g, int p, int r) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("dnpr_check: order above cap 20");
    if (r < 0 || r > 4) throw std::invalid_argument("dnpr_check: r must be in [0,4]");
    if (p < 1) throw std::invalid_argument("dnpr_check: p must be >= 1");

    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s)
        if (__builtin_popcountll(s) <= r) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (std::uint64_t omitted : subsets) {
        std::uint64_t rest = g.vertex_mask() & ~omitted;
        if (__builtin_popcountll(rest) < p) continue;
        auto comps = complement_components(g, rest);
        if (static_cast<int>(comps.size()) < p) continue;
        std::vector<std::uint64_t> classes;
        DnprSearcher searcher{g, p, r, n};
        if (!searcher.assign(comps, 0, classes)) continue;

        Decomposition d;
        d.exceptional = mask_to_list(omitted);
        for (std::uint64_t cls : classes) {
            d.classes.push_back(mask_to_list(cls));
            std::vector<std::vector<int>> blocks;
            for (std::uint64_t b : class_blocks(g, cls)) blocks.push_back(mask_to_list(b));
            d.blocks.push_back(std::move(blocks));
        }
        std::uint64_t w_mask = 0;
        for (int v : d.exceptional)
            if ((g.neighbor_mask(v) & rest) == rest) {
                d.w_set.push_back(v);
                w_mask |= 1ULL << v;
            }
        d.b_sets.resize(classes.size());
        for (size_t i = 0; i < classes.size(); ++i)
            for (int v : d.exceptional)
                if (!((w_mask >> v) & 1u) && (g.neighbor_mask(v) & classes[i]) == 0)
                    d.b_sets[i].push_back(v);
        return d;
    }
    return std::nullopt;
}

}  // namespace ebu
