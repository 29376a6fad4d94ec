// Command-line surface for the edge blow-up toolkit. Every subcommand maps
// onto one library operation; graphs cross the boundary as graph6 text and
// reports as JSON.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebu/blowup.hpp"
#include "ebu/constructions.hpp"
#include "ebu/containment.hpp"
#include "ebu/graph6.hpp"
#include "ebu/search.hpp"
#include "ebu/verify.hpp"

using nlohmann::ordered_json;

namespace {

struct CommonFlags {
    std::string format = "graph6";
    std::string out;
};

void emit(const CommonFlags& flags, const std::string& graph6_text, const ordered_json& json_doc) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!flags.out.empty()) {
        file.open(flags.out);
        if (!file) throw std::runtime_error("cannot open output file: " + flags.out);
        os = &file;
    }
    if (flags.format == "json") *os << json_doc.dump(2) << "\n";
    else *os << graph6_text << "\n";
}

int default_threads() {
    if (const char* env = std::getenv("EBU_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

ebu::ConstructionSpec parse_spec(const std::string& variant, int n, int p, int q) {
    if (variant == "H") return ebu::ConstructionSpec::h(n, p, q);
    if (variant == "Hprime" || variant == "H'") return ebu::ConstructionSpec::hprime(n, p, q);
    if (variant == "Hstar" || variant == "H*") return ebu::ConstructionSpec::hstar(n);
    if (variant == "turan" || variant == "T") return ebu::ConstructionSpec::turan_only(n, p);
    throw CLI::ValidationError("--variant must be one of H, Hprime, Hstar, turan");
}

std::string outcome_text(ebu::Outcome o) {
    switch (o) {
        case ebu::Outcome::found: return "found";
        case ebu::Outcome::absent: return "absent";
        case ebu::Outcome::undecided: return "undecided";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal-graph toolkit for edge blow-ups of lollipops"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "realize a named construction");
    std::string c_variant = "H";
    int c_n = 0, c_p = 2, c_q = 1;
    CommonFlags c_flags;
    construct->add_option("--variant", c_variant, "H | Hprime | Hstar | turan");
    construct->add_option("--n", c_n, "order")->required();
    construct->add_option("--p", c_p, "number of classes");
    construct->add_option("--q", c_q, "dominating clique order plus one");
    construct->add_option("--format", c_flags.format, "graph6 | json");
    construct->add_option("--out", c_flags.out, "output file");
    construct->callback([&] {
        ebu::ConstructionSpec spec = parse_spec(c_variant, c_n, c_p, c_q);
        ebu::Graph g = ebu::realize(spec);
        std::string text = ebu::encode_graph6(g);
        std::cerr << spec.label() << ": order " << g.order() << ", " << g.size() << " edges\n";
        emit(c_flags, text,
             {{"spec", spec.label()}, {"graph6", text}, {"order", g.order()}, {"edges", g.size()}});
    });

    // blowup ---------------------------------------------------------------
    auto* blow = app.add_subcommand("blowup", "blow each edge up into a (p+1)-clique");
    int b_k = 3, b_l = 1, b_p = 2;
    std::string b_base;
    CommonFlags b_flags;
    blow->add_option("--k", b_k, "lollipop cycle length");
    blow->add_option("--l", b_l, "lollipop path length");
    blow->add_option("--p", b_p, "clique order minus one")->required();
    blow->add_option("--base-graph6", b_base, "blow up this base instead of a lollipop");
    blow->add_option("--format", b_flags.format, "graph6 | json");
    blow->add_option("--out", b_flags.out, "output file");
    blow->callback([&] {
        ebu::Graph base = b_base.empty() ? ebu::lollipop(b_k, b_l) : ebu::decode_graph6(b_base);
        ebu::BlowupResult r = ebu::blowup(base, b_p);
        std::string text = ebu::encode_graph6(r.graph);
        std::cerr << "blow-up: order " << r.graph.order() << ", " << r.graph.size() << " edges\n";
        emit(b_flags, text,
             {{"graph6", text}, {"order", r.graph.order()}, {"edges", r.graph.size()}});
    });

    // split-family ----------------------------------------------------------
    auto* split = app.add_subcommand("split-family", "vertex-split family of a base graph");
    int s_k = 3, s_l = 1, s_p = 2;
    std::string s_base, s_mode = "independent";
    CommonFlags s_flags;
    split->add_option("--k", s_k, "lollipop cycle length");
    split->add_option("--l", s_l, "lollipop path length");
    split->add_option("--base-graph6", s_base, "split this base instead of a lollipop");
    split->add_option("--mode", s_mode, "all | independent | chi");
    split->add_option("--p", s_p, "chromatic bound for --mode chi");
    split->add_option("--format", s_flags.format, "graph6 | json");
    split->add_option("--out", s_flags.out, "output file");
    split->callback([&] {
        ebu::Graph base = s_base.empty() ? ebu::lollipop(s_k, s_l) : ebu::decode_graph6(s_base);
        ebu::SplitMode mode = s_mode == "all"           ? ebu::SplitMode::all
                              : s_mode == "independent" ? ebu::SplitMode::independent
                              : s_mode == "chi"         ? ebu::SplitMode::chi_bound
                                                        : throw CLI::ValidationError(
                                                              "--mode must be all, independent or chi");
        ebu::GraphFamily family = ebu::split_family(base, mode, s_p);
        std::string lines;
        ordered_json members = ordered_json::array();
        for (const ebu::Graph& g : family.members()) {
            std::string text = ebu::encode_graph6(ebu::canonical_representative(g));
            lines += text + "\n";
            members.push_back(text);
        }
        if (!lines.empty()) lines.pop_back();
        std::cerr << "family size: " << family.size() << "\n";
        emit(s_flags, lines, {{"size", family.size()}, {"members", members}});
    });

    // decomp-family ----------------------------------------------------------
    auto* decomp = app.add_subcommand("decomp-family",
                                      "brute-force decomposition family of a lollipop blow-up");
    int d_k = 3, d_l = 2, d_p = 2, d_max_m = 7, d_t_max = -1;
    std::uint64_t d_budget = ebu::SearchLimits{}.max_nodes;
    CommonFlags d_flags;
    decomp->add_option("--k", d_k, "lollipop cycle length");
    decomp->add_option("--l", d_l, "lollipop path length");
    decomp->add_option("--p", d_p, "clique order minus one");
    decomp->add_option("--max-m", d_max_m, "largest member order to enumerate (<= 8)");
    decomp->add_option("--t-max", d_t_max, "independent-set budget (default |V(L)|)");
    decomp->add_option("--budget", d_budget, "search node budget");
    decomp->add_option("--format", d_flags.format, "graph6 | json");
    decomp->add_option("--out", d_flags.out, "output file");
    decomp->callback([&] {
        ebu::Graph l = ebu::blowup(ebu::lollipop(d_k, d_l), d_p).graph;
        int t_max = d_t_max < 0 ? l.order() : d_t_max;
        auto result =
            ebu::decomposition_family_bruteforce(l, d_p, d_max_m, t_max, {d_budget});
        std::string lines;
        ordered_json members = ordered_json::array();
        for (const ebu::Graph& g : result.family.members()) {
            std::string text = ebu::encode_graph6(ebu::canonical_representative(g));
            lines += text + "\n";
            members.push_back(text);
        }
        if (!lines.empty()) lines.pop_back();
        std::cerr << "family size: " << result.family.size()
                  << (result.partial ? " (partial: some checks undecided)" : "") << "\n";
        emit(d_flags, lines,
             {{"size", result.family.size()}, {"partial", result.partial}, {"members", members}});
    });

    // contains ---------------------------------------------------------------
    auto* contains = app.add_subcommand("contains", "decide subgraph or blow-up containment");
    std::string ct_host, ct_pattern;
    int ct_k = 3, ct_l = 2, ct_p = 2;
    bool ct_blowup = false;
    std::uint64_t ct_budget = ebu::SearchLimits{}.max_nodes;
    CommonFlags ct_flags{"json", ""};
    contains->add_option("--host-graph6", ct_host, "host graph")->required();
    contains->add_option("--pattern-graph6", ct_pattern, "pattern graph (generic mode)");
    contains->add_flag("--blowup", ct_blowup, "search for the blow-up of a lollipop");
    contains->add_option("--k", ct_k, "lollipop cycle length (blow-up mode)");
    contains->add_option("--l", ct_l, "lollipop path length (blow-up mode)");
    contains->add_option("--p", ct_p, "clique order minus one (blow-up mode)");
    contains->add_option("--budget", ct_budget, "search node budget");
    contains->add_option("--out", ct_flags.out, "output file");
    contains->callback([&] {
        ebu::Graph host = ebu::decode_graph6(ct_host);
        ordered_json doc;
        if (ct_blowup) {
            auto r = ebu::blowup_contains(host, ct_k, ct_l, ct_p, {ct_budget});
            doc = {{"mode", "blowup"}, {"outcome", outcome_text(r.outcome)}, {"nodes", r.nodes}};
            if (r.embedding) {
                doc["base_map"] = r.embedding->base_map;
                doc["apex_sets"] = r.embedding->apex_sets;
            }
        } else {
            if (ct_pattern.empty()) throw CLI::ValidationError("--pattern-graph6 is required");
            auto r = ebu::subgraph_contains(host, ebu::decode_graph6(ct_pattern), {ct_budget});
            doc = {{"mode", "subgraph"}, {"outcome", outcome_text(r.outcome)}, {"nodes", r.nodes}};
            if (r.embedding) doc["map"] = r.embedding->map;
        }
        std::cerr << doc["outcome"].get<std::string>() << "\n";
        emit(ct_flags, doc.dump(), doc);
    });

    // vc ----------------------------------------------------------------------
    auto* vc = app.add_subcommand("vc", "exact minimum vertex cover");
    std::string vc_graph;
    CommonFlags vc_flags{"json", ""};
    vc->add_option("--graph6", vc_graph, "input graph")->required();
    vc->add_option("--out", vc_flags.out, "output file");
    vc->callback([&] {
        ebu::Graph g = ebu::decode_graph6(vc_graph);
        ebu::VertexCover cover = ebu::min_vertex_cover(g);
        std::vector<int> vertices;
        for (int v = 0; v < g.order(); ++v)
            if ((cover.vertices >> v) & 1u) vertices.push_back(v);
        ordered_json doc = {{"size", cover.size}, {"cover", vertices}};
        std::cerr << "minimum vertex cover: " << cover.size << "\n";
        emit(vc_flags, doc.dump(), doc);
    });

    // ex-brute ------------------------------------------------------------------
    auto* ex = app.add_subcommand("ex-brute", "exact Turan number by exhaustive enumeration");
    int ex_n = 0;
    std::string ex_pattern;
    CommonFlags ex_flags{"json", ""};
    ex->add_option("--n", ex_n, "order")->required();
    ex->add_option("--pattern-graph6", ex_pattern, "forbidden pattern")->required();
    ex->add_option("--out", ex_flags.out, "output file");
    ex->callback([&] {
        ebu::TuranResult r = ebu::ex_bruteforce(ex_n, ebu::decode_graph6(ex_pattern));
        ordered_json witnesses = ordered_json::array();
        for (const ebu::Graph& w : r.witnesses.members()) witnesses.push_back(ebu::encode_graph6(w));
        ordered_json doc = {{"n", r.n},
                            {"max_edges", r.max_edges},
                            {"exhaustive", r.exhaustive},
                            {"witnesses", witnesses}};
        std::cerr << "ex(" << ex_n << ", pattern) = " << r.max_edges << "\n";
        emit(ex_flags, doc.dump(), doc);
    });

    // verify ----------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
    std::vector<std::string> v_suites;
    std::string v_config, v_out;
    std::uint64_t v_seed = 1, v_budget = ebu::SearchLimits{}.max_nodes;
    int v_threads = default_threads();
    int v_k = 0, v_l = 0, v_p = 0, v_n = 0;
    bool v_timings = false, v_print_config = false;
    verify->add_option("--suite", v_suites,
                       "freeness | formulas | families | oracle-equivalence | saturation | all");
    verify->add_option("--config", v_config, "JSON file overriding the built-in parameter grids");
    verify->add_flag("--print-config", v_print_config,
                     "print the built-in parameter grids and exit");
    verify->add_option("--k", v_k, "restrict the freeness grid to this cycle length");
    verify->add_option("--l", v_l, "restrict the freeness grid to this path length");
    verify->add_option("--p", v_p, "restrict the freeness grid to this p");
    verify->add_option("--n", v_n, "host order for the freeness grid");
    verify->add_option("--seed", v_seed, "seed for randomized suites");
    verify->add_option("--threads", v_threads, "worker threads for per-case loops");
    verify->add_option("--budget", v_budget, "search node budget");
    verify->add_flag("--timings", v_timings, "include wall times (breaks byte reproducibility)");
    verify->add_option("--out", v_out, "report file (default stdout)");
    verify->callback([&] {
        if (v_print_config) {
            std::cout << ebu::default_verify_config().dump(2) << "\n";
            return;
        }
        ordered_json config = ebu::default_verify_config();
        if (!v_config.empty()) {
            std::ifstream in(v_config);
            if (!in) throw std::runtime_error("cannot read config file: " + v_config);
            ordered_json overrides = ordered_json::parse(in);
            for (auto& [key, value] : overrides.items()) config[key] = value;
        }
        if (v_k > 0 && v_l > 0 && v_p > 0)
            config["freeness"]["cells"] = ordered_json::array({ordered_json::array({v_k, v_l, v_p})});
        if (v_n > 0) config["freeness"]["n"] = v_n;
        ebu::VerifyOptions opts;
        opts.seed = v_seed;
        opts.threads = v_threads;
        opts.timings = v_timings;
        opts.limits = ebu::SearchLimits{v_budget};

        std::vector<std::string> names = v_suites;
        if (names.empty() || (names.size() == 1 && names[0] == "all")) names = ebu::suite_names();
        std::vector<ebu::SuiteReport> suites;
        int failed = 0, undecided = 0;
        for (const std::string& name : names) {
            suites.push_back(ebu::run_suite(name, config, opts));
            failed += suites.back().failed();
            undecided += suites.back().undecided();
            std::cerr << name << ": " << suites.back().cases.size() << " cases, "
                      << suites.back().failed() << " failed, " << suites.back().undecided()
                      << " undecided\n";
        }
        ordered_json report = ebu::report_to_json(suites, opts, config);
        if (v_out.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::ofstream out(v_out);
            if (!out) throw std::runtime_error("cannot open report file: " + v_out);
            out << report.dump(2) << "\n";
        }
        if (failed > 0) throw CLI::RuntimeError("verification failed", 1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
