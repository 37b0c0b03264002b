// Command-line front end: gen, verify, solve, construct, experiment.
//
// Exit codes: 0 success (or verdict true), 1 verdict false (verify only),
// 2 usage error, 3 runtime error or timeout.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "expind/expind.hpp"

namespace {

using namespace expind;

constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kUsage = 2;
constexpr int kRuntime = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file " + path);
    return parse_edge_list(in);
}

VertexSet read_set(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open set file " + path);
    std::vector<Vertex> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) {
            if (v < 0 || static_cast<std::size_t>(v) >= g.order())
                throw UsageError(path + ":" + std::to_string(lineno) + ": vertex id out of range");
            ids.push_back(static_cast<Vertex>(v));
        }
        if (!ls.eof()) throw UsageError(path + ":" + std::to_string(lineno) + ": malformed vertex id");
    }
    return VertexSet(ids);
}

void write_set(std::ostream& out, const VertexSet& s) {
    for (Vertex v : s) out << v << '\n';
}

// Writes to `path`, or to stdout when path is empty or "-".
template <class F>
void emit(const std::string& path, F&& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    body(out);
}

TimeBudget budget_from_seconds(double seconds) {
    if (seconds <= 0) return std::nullopt;
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int k = 1, delta = 3, depth = 1;
    std::size_t n = 1, extra = 0;
    std::uint64_t seed = 1;
    std::string out, labels_out, dot_out;
};

int run_gen(const GenArgs& a) {
    LabeledGraph lg;
    try {
        if (a.family == "tk") lg = gen_Tk(a.k);
        else if (a.family == "tprime") lg = gen_Tprime(a.k);
        else if (a.family == "tdelta") lg = gen_TDelta(a.delta, a.depth);
        else if (a.family == "pbt") lg = gen_perfect_binary(a.depth);
        else if (a.family == "path") lg.graph = gen_path(a.n);
        else if (a.family == "cycle") lg.graph = gen_cycle(a.n);
        else if (a.family == "random-tree") lg.graph = random_subcubic_tree(a.n, a.seed);
        else if (a.family == "random-graph") lg.graph = random_subcubic_graph(a.n, a.extra, a.seed);
        else throw UsageError("unknown family " + a.family);
    } catch (const FamilyError& e) {
        throw UsageError(e.what());
    }
    emit(a.out, [&](std::ostream& os) { write_edge_list(os, lg.graph); });
    if (!a.labels_out.empty()) emit(a.labels_out, [&](std::ostream& os) { write_labels(os, lg); });
    if (!a.dot_out.empty()) emit(a.dot_out, [&](std::ostream& os) { to_dot(os, lg.graph); });
    return kOk;
}

struct VerifyArgs {
    std::string graph, set, mode = "ei", report;
};

int run_verify(const VerifyArgs& a) {
    auto g = read_graph(a.graph);
    auto s = read_set(a.set, g);
    WeightReport r;
    if (a.mode == "ei") r = is_exponentially_independent(g, s);
    else if (a.mode == "ed") r = is_exponentially_dominating(g, s);
    else throw UsageError("--mode must be ei or ed");
    emit(a.report, [&](std::ostream& os) {
        os << "# " << kVersion << '\n';
        write_report(os, r);
    });
    return r.verdict ? kOk : kVerdictFalse;
}

struct SolveArgs {
    std::string graph, param = "alpha-e", require_set, out;
    bool require_endvertices = false;
    double timeout = 0;
    unsigned jobs = 1;
};

int run_solve(const SolveArgs& a) {
    auto g = read_graph(a.graph);
    SearchResult r;
    if (a.param == "alpha-e") {
        AlphaOptions opts;
        if (a.require_endvertices) opts.required = endvertices(g);
        if (!a.require_set.empty()) opts.required = opts.required.united(read_set(a.require_set, g));
        opts.time_budget = budget_from_seconds(a.timeout);
        r = alpha_e_exact(g, opts);
        if (!is_exponentially_independent(g, r.witness).verdict)
            throw std::logic_error("alpha-e witness failed re-verification");
    } else if (a.param == "gamma-e") {
        if (a.require_endvertices || !a.require_set.empty())
            throw UsageError("--require-* applies to alpha-e only");
        r = gamma_e_exact(g, budget_from_seconds(a.timeout));
        if (!is_exponentially_dominating(g, r.witness).verdict)
            throw std::logic_error("gamma-e witness failed re-verification");
    } else {
        throw UsageError("--param must be alpha-e or gamma-e");
    }
    std::cout << "# " << kVersion << '\n';
    write_search_result(std::cout, a.param, r);
    if (!a.out.empty()) emit(a.out, [&](std::ostream& os) { write_set(os, r.witness); });
    return r.status == SearchStatus::Optimal ? kOk : kRuntime;
}

struct ConstructArgs {
    std::string method, graph, family = "tk", out, trace_out, graph_out;
    long long dstar = 0;
    int k = 1, depth = 1, phase = 1;
};

int run_construct(const ConstructArgs& a) {
    VertexSet s;
    Graph g;
    std::string check = "ei";
    if (a.method == "packing" || a.method == "tree-good") {
        if (a.graph.empty()) throw UsageError("--graph is required for " + a.method);
        g = read_graph(a.graph);
        if (a.method == "packing") {
            std::uint32_t dstar = a.dstar > 0 ? static_cast<std::uint32_t>(a.dstar)
                                              : (g.order() >= 4 ? theorem1_dstar(g.order()) : 1);
            s = greedy_packing(g, dstar);
            std::cerr << "dstar " << dstar << '\n';
        } else {
            GoodSet gs;
            try {
                gs = tree_good_set(g);
            } catch (const NotATreeError& e) {
                throw UsageError(e.what());
            } catch (const NotSubcubicError& e) {
                throw UsageError(e.what());
            }
            s = gs.set;
            if (!a.trace_out.empty()) emit(a.trace_out, [&](std::ostream& os) { write_trace(os, gs.trace); });
            if (gs.trace.base_rule != "all-but-one-endvertex" && !is_good_set(g, s))
                throw std::logic_error("tree-good result failed the goodness audit");
        }
    } else if (a.method == "family-canonical") {
        LabeledGraph lg;
        try {
            if (a.family == "tk") {
                lg = gen_Tk(a.k);
                s = canonical_set_Tk(a.k);
            } else if (a.family == "tprime") {
                lg = gen_Tprime(a.k);
                s = circles_square_set(a.k, a.phase);
            } else if (a.family == "tprime-endvertices") {
                lg = gen_Tprime(a.k);
                s = endvertex_set(lg);
            } else if (a.family == "pbt") {
                lg = gen_perfect_binary(a.depth);
                s = leaf_set(lg);
            } else if (a.family == "tdelta-grandchild") {
                lg = gen_TDelta(4, a.depth + 2);
                s = grandchild_set(a.depth);
            } else {
                throw UsageError("unknown canonical family " + a.family);
            }
        } catch (const FamilyError& e) {
            throw UsageError(e.what());
        }
        g = lg.graph;
        if (!a.graph_out.empty()) emit(a.graph_out, [&](std::ostream& os) { write_edge_list(os, g); });
    } else {
        throw UsageError("--method must be packing, tree-good or family-canonical");
    }
    if (!is_exponentially_independent(g, s).verdict) {
        std::cerr << "constructed set is not exponentially independent\n";
        return kRuntime;
    }
    emit(a.out, [&](std::ostream& os) { write_set(os, s); });
    std::cerr << "size " << s.size() << '\n';
    return kOk;
}

struct ExperimentArgs {
    std::string name, out, corpus = "tk:k=1-4;pbt:depth=1-3;path:n=2-12;trees:n=5-9", p = "1/2";
    std::uint64_t seed = 1, trials = 2000, random_graphs = 0;
    int kmin = 3, kmax = 9, k = 3;
    std::size_t nmax = 7;
    unsigned jobs = 1;
    double timeout = 0;
};

int run_experiment(const ExperimentArgs& a) {
    ExperimentConfig cfg;
    cfg.name = a.name;
    cfg.seed = a.seed;
    cfg.output_path = a.out;
    try {
        if (a.name == "bound-table") {
            cfg.params["corpus"] = a.corpus;
            auto table = bound_table(parse_corpus(a.corpus), cfg, a.jobs);
            emit(a.out, [&](std::ostream& os) { table.write(os); });
        } else if (a.name == "random-ei") {
            cfg.params["p"] = a.p;
            cfg.params["trials"] = std::to_string(a.trials);
            cfg.params["kmin"] = std::to_string(a.kmin);
            cfg.params["kmax"] = std::to_string(a.kmax);
            auto table = random_ei_probability(a.kmin, a.kmax, parse_probability(a.p), a.trials, cfg, a.jobs);
            emit(a.out, [&](std::ostream& os) { table.write(os); });
        } else if (a.name == "conjecture-scan") {
            cfg.params["nmax"] = std::to_string(a.nmax);
            cfg.params["random_graphs"] = std::to_string(a.random_graphs);
            auto report = conjecture_scan(a.nmax, a.random_graphs, cfg, a.jobs);
            emit(a.out, [&](std::ostream& os) { report.table.write(os); });
            report.write_findings(std::cout);
        } else if (a.name == "fact2") {
            auto rep = fact2_check(a.k, budget_from_seconds(a.timeout));
            emit(a.out, [&](std::ostream& os) {
                os << "# " << kVersion << '\n';
                rep.write(os);
            });
            std::cout << "FINDINGS:\n";
            std::cout << "constrained_optimum " << rep.constrained.optimum << '\n';
            std::cout << "interior_blocks_forced " << (rep.interior_blocks_forced ? "true" : "false") << '\n';
            if (rep.constrained.status == SearchStatus::TimedOut) return kRuntime;
        } else {
            throw UsageError("unknown experiment " + a.name);
        }
    } catch (const ExperimentError& e) {
        throw UsageError(e.what());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential independence and domination toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a graph family as an edge list");
    g->add_option("--family", gen.family, "tk|tprime|tdelta|pbt|path|cycle|random-tree|random-graph")->required();
    g->add_option("--k", gen.k, "block count for tk / tprime");
    g->add_option("--delta", gen.delta, "degree for tdelta");
    g->add_option("--depth", gen.depth, "depth for tdelta / pbt");
    g->add_option("--n", gen.n, "order for path / cycle / random families");
    g->add_option("--extra", gen.extra, "extra edges for random-graph");
    g->add_option("--seed", gen.seed, "seed for random families");
    g->add_option("--out", gen.out, "edge-list output (default stdout)");
    g->add_option("--labels-out", gen.labels_out, "role label sidecar output");
    g->add_option("--dot-out", gen.dot_out, "Graphviz output");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check a set for exponential independence or domination");
    v->add_option("--graph", ver.graph)->required();
    v->add_option("--set", ver.set)->required();
    v->add_option("--mode", ver.mode, "ei|ed");
    v->add_option("--report", ver.report, "report output (default stdout)");

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "Exact alpha_e or gamma_e");
    s->add_option("--graph", sol.graph)->required();
    s->add_option("--param", sol.param, "alpha-e|gamma-e");
    s->add_flag("--require-endvertices", sol.require_endvertices);
    s->add_option("--require-set", sol.require_set);
    s->add_option("--timeout", sol.timeout, "seconds (0 = none)");
    s->add_option("--jobs", sol.jobs, "accepted for uniformity; search is sequential");
    s->add_option("--out", sol.out, "witness output");

    ConstructArgs con;
    auto* c = app.add_subcommand("construct", "Build an exponentially independent set");
    c->add_option("--method", con.method, "packing|tree-good|family-canonical")->required();
    c->add_option("--graph", con.graph);
    c->add_option("--dstar", con.dstar, "packing separation (default from n)");
    c->add_option("--family", con.family, "tk|tprime|tprime-endvertices|pbt|tdelta-grandchild");
    c->add_option("--k", con.k);
    c->add_option("--depth", con.depth);
    c->add_option("--phase", con.phase, "square phase for tprime (0..2)");
    c->add_option("--out", con.out, "set output (default stdout)");
    c->add_option("--trace-out", con.trace_out, "reduction trace for tree-good");
    c->add_option("--graph-out", con.graph_out, "edge list of the family graph");

    ExperimentArgs exp;
    auto* e = app.add_subcommand("experiment", "Run an experiment");
    e->add_option("--name", exp.name, "bound-table|random-ei|conjecture-scan|fact2")->required();
    e->add_option("--seed", exp.seed);
    e->add_option("--out", exp.out, "CSV / report output (default stdout)");
    e->add_option("--jobs", exp.jobs);
    e->add_option("--corpus", exp.corpus);
    e->add_option("--p", exp.p);
    e->add_option("--trials", exp.trials);
    e->add_option("--kmin", exp.kmin);
    e->add_option("--kmax", exp.kmax);
    e->add_option("--k", exp.k);
    e->add_option("--nmax", exp.nmax);
    e->add_option("--random-graphs", exp.random_graphs);
    e->add_option("--timeout", exp.timeout);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForVersion& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (*g) return run_gen(gen);
        if (*v) return run_verify(ver);
        if (*s) return run_solve(sol);
        if (*c) return run_construct(con);
        if (*e) return run_experiment(exp);
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << '\n';
        return kUsage;
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << '\n';
        return kUsage;
    } catch (const InfeasibleError& err) {
        std::cerr << "infeasible: " << err.what() << '\n';
        return kRuntime;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kRuntime;
    }
    return kUsage;
}
