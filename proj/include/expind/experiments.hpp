#pragma once

// Reproducible experiment harness. Every table carries its configuration in
// footer comment lines; identical configurations produce identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "expind/constructors.hpp"
#include "expind/dyadic.hpp"
#include "expind/families.hpp"
#include "expind/graph.hpp"
#include "expind/random.hpp"
#include "expind/solvers.hpp"
#include "expind/version.hpp"
#include "expind/weights.hpp"

namespace expind {

class ExperimentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> params;
    std::string output_path;
};

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row) {
        if (row.size() != header_.size())
            throw std::logic_error("row has " + std::to_string(row.size()) + " cells, header has " +
                                   std::to_string(header_.size()));
        rows_.push_back(std::move(row));
    }
    void add_footer(std::string line) { footer_.push_back(std::move(line)); }

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    const std::vector<std::string>& footer() const { return footer_; }

    std::size_t column(const std::string& name) const {
        auto it = std::find(header_.begin(), header_.end(), name);
        if (it == header_.end()) throw std::out_of_range("no column " + name);
        return static_cast<std::size_t>(it - header_.begin());
    }
    const std::string& cell(std::size_t row, const std::string& name) const { return rows_.at(row).at(column(name)); }

    static std::string quote(const std::string& cell) {
        if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
        std::string out = "\"";
        for (char c : cell) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }

    void write(std::ostream& out) const {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << quote(cells[i]);
            out << "\r\n";
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        for (const auto& f : footer_) out << "# " << f << "\r\n";
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::string> footer_;
};

inline void add_config_footer(CsvTable& t, const ExperimentConfig& cfg) {
    t.add_footer("tool=" + std::string(kVersion));
    t.add_footer("experiment=" + cfg.name);
    t.add_footer("seed=" + std::to_string(cfg.seed));
    for (const auto& [k, v] : cfg.params) t.add_footer("param." + k + "=" + v);
}

namespace detail {

/// Runs body(i) for i in [0, count) on `jobs` threads; results must be written to
/// per-index slots so the outcome does not depend on scheduling.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += jobs) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

inline std::string ids_text(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Corpus specifications for bound tables:
//   entry (';' entry)*        entry = family ':' key '=' value (',' key '=' value)*
// families: tk(k), tprime(k), pbt(depth), path(n), cycle(n), trees(n), random-tree(n,count,seed),
//           random-graph(n,extra,count,seed). Integer values may be ranges "a-b".

struct CorpusInstance {
    std::string name;
    Graph graph;
};

namespace detail {

inline std::pair<long long, long long> parse_range(const std::string& text) {
    try {
        auto dash = text.find('-', 1);
        if (dash == std::string::npos) {
            long long v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, dash)), std::stoll(text.substr(dash + 1))};
    } catch (const std::exception&) {
        throw ExperimentError("bad integer or range \"" + text + "\"");
    }
}

}  // namespace detail

inline std::vector<CorpusInstance> parse_corpus(const std::string& spec) {
    std::vector<CorpusInstance> out;
    std::stringstream entries(spec);
    std::string entry;
    while (std::getline(entries, entry, ';')) {
        entry.erase(std::remove_if(entry.begin(), entry.end(), ::isspace), entry.end());
        if (entry.empty()) continue;
        auto colon = entry.find(':');
        if (colon == std::string::npos) throw ExperimentError("corpus entry without ':' in \"" + entry + "\"");
        std::string family = entry.substr(0, colon);
        std::map<std::string, std::string> args;
        std::stringstream kvs(entry.substr(colon + 1));
        std::string kv;
        while (std::getline(kvs, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw ExperimentError("expected key=value in \"" + kv + "\"");
            args[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        auto need = [&](const std::string& key) {
            auto it = args.find(key);
            if (it == args.end()) throw ExperimentError(family + " needs " + key + "=");
            return detail::parse_range(it->second);
        };
        auto opt = [&](const std::string& key, long long dflt) {
            auto it = args.find(key);
            return it == args.end() ? dflt : detail::parse_range(it->second).first;
        };
        auto each = [&](const std::string& key, auto&& make) {
            auto [a, b] = need(key);
            if (a > b) throw ExperimentError("empty range for " + key);
            for (long long v = a; v <= b; ++v) make(v);
        };
        try {
            if (family == "tk") {
                each("k", [&](long long k) { out.push_back({"T_" + std::to_string(k), gen_Tk(static_cast<int>(k)).graph}); });
            } else if (family == "tprime") {
                each("k", [&](long long k) { out.push_back({"T'_" + std::to_string(k), gen_Tprime(static_cast<int>(k)).graph}); });
            } else if (family == "pbt") {
                each("depth", [&](long long d) {
                    out.push_back({"PBT_" + std::to_string(d), gen_perfect_binary(static_cast<int>(d)).graph});
                });
            } else if (family == "path") {
                each("n", [&](long long n) { out.push_back({"P_" + std::to_string(n), gen_path(static_cast<std::size_t>(n))}); });
            } else if (family == "cycle") {
                each("n", [&](long long n) { out.push_back({"C_" + std::to_string(n), gen_cycle(static_cast<std::size_t>(n))}); });
            } else if (family == "trees") {
                each("n", [&](long long n) {
                    std::size_t idx = 0;
                    for_each_tree(static_cast<std::size_t>(n), 3, true, [&](const Graph& t) {
                        out.push_back({"tree_" + std::to_string(n) + "_" + std::to_string(idx++), t});
                    });
                });
            } else if (family == "random-tree" || family == "random-graph") {
                auto count = opt("count", 1);
                auto seed = static_cast<std::uint64_t>(opt("seed", 1));
                auto extra = opt("extra", 0);
                each("n", [&](long long n) {
                    for (long long i = 0; i < count; ++i) {
                        auto s = counter_hash(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
                        auto g = family == "random-tree"
                                     ? random_subcubic_tree(static_cast<std::size_t>(n), s)
                                     : random_subcubic_graph(static_cast<std::size_t>(n), static_cast<std::size_t>(extra), s);
                        out.push_back({family + "_" + std::to_string(n) + "_" + std::to_string(i), std::move(g)});
                    }
                });
            } else {
                throw ExperimentError("unknown corpus family \"" + family + "\"");
            }
        } catch (const FamilyError& e) {
            throw ExperimentError(std::string("corpus entry \"") + entry + "\": " + e.what());
        }
    }
    return out;
}

inline constexpr std::size_t kExactAlphaMaxOrder = 20;
inline constexpr std::size_t kExactGammaMaxOrder = 16;

/// Per-instance parameters against every known bound. Exact alpha_e for n <= 20,
/// otherwise the best constructive lower bound (good set or packing).
inline CsvTable bound_table(const std::vector<CorpusInstance>& corpus, const ExperimentConfig& cfg, unsigned jobs = 1) {
    CsvTable table({"instance", "n", "m", "connected", "tree", "subcubic", "alpha_e", "alpha_source", "gamma_e",
                    "upper_(n+1)/2", "upper_ok", "tree_(2n+8)/13", "tree_(2n+8)/13_ok", "packing_n/(192log2^2n)",
                    "packing_ok", "tree_(n+3)/4", "tree_(n+3)/4_ok", "witnesses_verified"});
    std::vector<std::vector<std::string>> rows(corpus.size());
    detail::parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        const auto& inst = corpus[i];
        const Graph& g = inst.graph;
        const std::size_t n = g.order();
        const bool connected = is_connected(g), tree = is_tree(g), subcubic = is_subcubic(g);
        bool verified = true;

        std::size_t alpha = 0;
        std::string source;
        if (n <= kExactAlphaMaxOrder) {
            auto r = alpha_e_exact(g);
            alpha = r.optimum;
            source = "exact";
            verified = verified && is_exponentially_independent(g, r.witness).verdict;
        } else {
            source = "lower-bound";
            if (tree && subcubic) {
                auto gs = tree_good_set(g);
                alpha = gs.set.size();
                verified = verified && is_exponentially_independent(g, gs.set).verdict;
            }
            if (subcubic && n >= 4) {
                auto packing = greedy_packing(g, theorem1_dstar(n));
                if (is_exponentially_independent(g, packing).verdict) alpha = std::max(alpha, packing.size());
            }
        }
        std::string gamma;
        if (n <= kExactGammaMaxOrder) {
            auto r = gamma_e_exact(g);
            gamma = std::to_string(r.optimum);
            verified = verified && is_exponentially_dominating(g, r.witness).verdict;
        }
        const bool connected_subcubic = connected && subcubic;
        const bool subcubic_tree = tree && subcubic;
        const bool has_deg2 = !degree2_vertices(g).empty();
        std::string upper_ok = connected_subcubic ? detail::flag(2 * alpha <= n + 1) : "n/a";
        std::string e5_ok = subcubic_tree ? detail::flag(13 * alpha >= 2 * n + 8) : "n/a";
        double log2n = n >= 2 ? std::log2(static_cast<double>(n)) : 0.0;
        double packing_bound = n >= 2 ? static_cast<double>(n) / (192.0 * log2n * log2n) : 0.0;
        std::string packing_ok = subcubic && n >= 2 ? detail::flag(static_cast<double>(alpha) >= packing_bound) : "n/a";
        std::string thm4_ok = subcubic_tree && has_deg2 ? detail::flag(4 * alpha >= n + 3) : "n/a";
        rows[i] = {inst.name,
                   std::to_string(n),
                   std::to_string(g.size()),
                   detail::flag(connected),
                   detail::flag(tree),
                   detail::flag(subcubic),
                   std::to_string(alpha),
                   source,
                   gamma,
                   detail::fixed((static_cast<double>(n) + 1) / 2, 4),
                   upper_ok,
                   detail::fixed((2.0 * static_cast<double>(n) + 8) / 13, 4),
                   e5_ok,
                   detail::fixed(packing_bound, 4),
                   packing_ok,
                   detail::fixed((static_cast<double>(n) + 3) / 4, 4),
                   thm4_ok,
                   detail::flag(verified)};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    add_config_footer(table, cfg);
    return table;
}

// ---------------------------------------------------------------------------
// Random sets in perfect binary trees

struct Probability {
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 2;
};

inline Probability parse_probability(const std::string& text) {
    Probability p;
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            p.numerator = std::stoull(text);
            p.denominator = 1;
        } else {
            p.numerator = std::stoull(text.substr(0, slash));
            p.denominator = std::stoull(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw ExperimentError("probability must be \"p/q\" or an integer: " + text);
    }
    return p;
}

/// Wilson score interval at 95% (z = 1.96): {center, half-width}.
inline std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    const double z = 1.96;
    double nt = static_cast<double>(trials);
    double ph = static_cast<double>(successes) / nt;
    double denom = 1 + z * z / nt;
    double center = (ph + z * z / (2 * nt)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / nt + z * z / (4 * nt * nt)) / denom;
    return {center, half};
}

/// Root plus every other vertex with probability p, keyed by (seed, depth, trial, vertex).
inline bool random_set_is_independent(const Graph& pbt, WeightEngine& engine, std::vector<char>& in,
                                      std::vector<Vertex>& members, int depth, std::uint64_t trial,
                                      const Probability& p, std::uint64_t seed) {
    std::fill(in.begin(), in.end(), 0);
    members.clear();
    in[0] = 1;
    members.push_back(0);
    for (Vertex v = 1; v < pbt.order(); ++v) {
        auto word = counter_hash(seed, static_cast<std::uint64_t>(depth), trial, v);
        if (scale_to(word, p.denominator) < p.numerator) {
            in[v] = 1;
            members.push_back(v);
        }
    }
    return engine.independent(in, members);
}

inline CsvTable random_ei_probability(int k_min, int k_max, Probability p, std::uint64_t trials,
                                      const ExperimentConfig& cfg, unsigned jobs = 1) {
    if (k_min > k_max || k_min < 0) throw ExperimentError("empty depth range");
    if (p.denominator == 0 || p.numerator == 0 || p.numerator > p.denominator)
        throw ExperimentError("p must lie in (0, 1]");
    if (trials == 0) throw ExperimentError("trials must be positive");
    CsvTable table({"depth", "n", "trials", "successes", "p_hat", "ci95_center", "ci95_half_width"});
    for (int k = k_min; k <= k_max; ++k) {
        auto pbt = gen_perfect_binary(k).graph;
        jobs = std::max(1u, jobs);
        std::vector<std::uint64_t> successes(jobs, 0);
        detail::parallel_for(jobs, jobs, [&](std::size_t w) {
            WeightEngine engine(pbt);
            std::vector<char> in(pbt.order(), 0);
            std::vector<Vertex> members;
            for (std::uint64_t t = w; t < trials; t += jobs)
                successes[w] += random_set_is_independent(pbt, engine, in, members, k, t, p, cfg.seed);
        });
        std::uint64_t total = 0;
        for (auto s : successes) total += s;
        auto [center, half] = wilson_interval(total, trials);
        table.add_row({std::to_string(k), std::to_string(pbt.order()), std::to_string(trials), std::to_string(total),
                       detail::fixed(static_cast<double>(total) / static_cast<double>(trials)), detail::fixed(center),
                       detail::fixed(half)});
    }
    add_config_footer(table, cfg);
    return table;
}

// ---------------------------------------------------------------------------
// gamma_e <= alpha_e scan

inline constexpr std::size_t kScanMaxOrder = 10;

struct ScanReport {
    CsvTable table{{"instance", "n", "m", "gamma_e", "alpha_e", "gamma_le_alpha", "gamma_witness", "alpha_witness",
                    "maximal_ei_not_ed"}};
    std::vector<std::string> violations;
    std::vector<std::string> maximal_not_dominating;  // certificates, one per instance that has one

    void write_findings(std::ostream& out) const {
        out << "FINDINGS:\n";
        out << "violations_gamma_gt_alpha " << violations.size() << '\n';
        for (const auto& v : violations) out << "violation " << v << '\n';
        out << "maximal_ei_not_ed_instances " << maximal_not_dominating.size() << '\n';
        for (const auto& c : maximal_not_dominating) out << "certificate " << c << '\n';
    }
};

/// Exact gamma_e and alpha_e on every isomorphism class of trees with 1..n_max
/// vertices, plus `random_graphs` seeded connected subcubic graphs. Violations of
/// gamma_e <= alpha_e are reported, never thrown.
inline ScanReport conjecture_scan(std::size_t n_max, std::size_t random_graphs, const ExperimentConfig& cfg,
                                  unsigned jobs = 1) {
    if (n_max < 1) throw ExperimentError("n_max must be >= 1");
    if (n_max > kScanMaxOrder) throw ExperimentError("n_max > 10 is too large for exhaustive gamma_e");
    std::vector<CorpusInstance> corpus;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::size_t idx = 0;
        for_each_tree(n, 0, true, [&](const Graph& t) {
            corpus.push_back({"tree_" + std::to_string(n) + "_" + std::to_string(idx++), t});
        });
    }
    for (std::size_t i = 0; i < random_graphs; ++i) {
        std::size_t n = 4 + counter_hash(cfg.seed, 0x5CA7, i) % (n_max >= 4 ? n_max - 3 : 1);
        std::size_t extra = 1 + counter_hash(cfg.seed, 0xE7A, i) % 2;
        try {
            corpus.push_back({"graph_" + std::to_string(i), random_subcubic_graph(n, extra, counter_hash(cfg.seed, i))});
        } catch (const FamilyError&) {
            corpus.push_back({"graph_" + std::to_string(i), random_subcubic_tree(n, counter_hash(cfg.seed, i))});
        }
    }

    struct Row {
        std::vector<std::string> cells;
        std::optional<std::string> violation;
        std::optional<std::string> certificate;
    };
    std::vector<Row> rows(corpus.size());
    detail::parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        const auto& inst = corpus[i];
        const Graph& g = inst.graph;
        auto gamma = gamma_e_exact(g);
        auto alpha = alpha_e_exact(g);
        if (!is_exponentially_dominating(g, gamma.witness).verdict ||
            !is_exponentially_independent(g, alpha.witness).verdict)
            throw std::logic_error("witness failed re-verification on " + inst.name);
        auto maximal = find_maximal_ei_not_ed(g);
        std::string cert;
        Row row;
        if (maximal) {
            auto ed = is_exponentially_dominating(g, *maximal);
            cert = detail::ids_text(*maximal);
            std::ostringstream c;
            c << inst.name << " edges=" << g.size() << " set=" << *maximal << " undominated_vertex="
              << *ed.first_violation << " weight=" << ed.find(*ed.first_violation)->weight.str();
            row.certificate = c.str();
        }
        bool ok = gamma.optimum <= alpha.optimum;
        if (!ok) {
            std::ostringstream v;
            v << inst.name << " gamma_e=" << gamma.optimum << " alpha_e=" << alpha.optimum << " edges=";
            for (auto [a, b] : g.edges()) v << a << '-' << b << ' ';
            row.violation = v.str();
        }
        row.cells = {inst.name,
                     std::to_string(g.order()),
                     std::to_string(g.size()),
                     std::to_string(gamma.optimum),
                     std::to_string(alpha.optimum),
                     detail::flag(ok),
                     detail::ids_text(gamma.witness),
                     detail::ids_text(alpha.witness),
                     cert};
        rows[i] = std::move(row);
    });
    ScanReport report;
    for (auto& r : rows) {
        report.table.add_row(std::move(r.cells));
        if (r.violation) report.violations.push_back(*r.violation);
        if (r.certificate) report.maximal_not_dominating.push_back(*r.certificate);
    }
    add_config_footer(report.table, cfg);
    return report;
}

// ---------------------------------------------------------------------------
// Endvertex-constrained optimum on T'_k

struct InequalityChain {
    std::string vertex_role;          // "a", "b" or "c"
    std::vector<Dyadic> terms;        // influence of L_(i-1), L_i, L_(i+1) at the vertex
    std::vector<Dyadic> expected;     // the closed-form values of those terms
    Dyadic total;
    bool exceeds_one = false;
};

struct Fact2Report {
    int k = 0;
    std::size_t n = 0;
    std::vector<InequalityChain> chains;  // evaluated on block 2 of T'_max(k,3)
    bool chains_certified = false;
    SearchResult constrained;             // with interior a_i, b_i, c_i pre-excluded
    std::optional<SearchResult> unreduced; // same search without the pre-exclusion
    bool interior_blocks_forced = false;  // S cap V_i == L_i for 2 <= i <= k-1
    std::size_t bound_4n_13 = 0;          // floor(4n/13) = 4k
    std::vector<std::pair<std::size_t, bool>> circles_square;  // per phase: size, independent

    void write(std::ostream& out) const {
        out << "k " << k << "\nn " << n << '\n';
        for (const auto& c : chains) {
            out << "chain " << c.vertex_role << "_i:";
            for (std::size_t j = 0; j < c.terms.size(); ++j)
                out << ' ' << c.terms[j].str() << (c.terms[j] == c.expected[j] ? "" : "(!)");
            out << " total=" << c.total.str() << " (" << c.total.decimal() << ") exceeds_one="
                << detail::flag(c.exceeds_one) << '\n';
        }
        out << "constrained_optimum " << constrained.optimum
            << (constrained.status == SearchStatus::TimedOut ? " (timed out)" : "") << '\n';
        out << "constrained_witness " << constrained.witness << '\n';
        if (unreduced) out << "unreduced_optimum " << unreduced->optimum << '\n';
        out << "interior_blocks_forced " << detail::flag(interior_blocks_forced) << '\n';
        for (std::size_t ph = 0; ph < circles_square.size(); ++ph)
            out << "circles_square phase=" << ph << " size=" << circles_square[ph].first
                << " independent=" << detail::flag(circles_square[ph].second) << '\n';
    }
};

/// Influence sums that rule out a_i, b_i, c_i in interior blocks of T'_k once all
/// endvertices are selected, evaluated exactly on block 2 of T'_3.
inline std::vector<InequalityChain> fact2_chains() {
    auto lg = gen_Tprime(3);
    const auto& g = lg.graph;
    const auto& prev = lg.set("L_1");
    const auto& own = lg.set("L_2");
    const auto& next = lg.set("L_3");
    struct Spec {
        const char* role;
        std::vector<Dyadic> expected;
    };
    const Dyadic w_b = Dyadic(11, 5), w_a = Dyadic(23, 6);
    std::vector<Spec> specs = {
        {"a", {w_a, Dyadic(11, 4), w_b.scaled(-1)}},
        {"b", {w_a.scaled(-1), Dyadic(23, 5), w_b}},
        {"c", {w_a.scaled(-2), Dyadic(7, 3), w_b.scaled(-3)}},
    };
    std::vector<InequalityChain> out;
    for (const auto& s : specs) {
        Vertex v = lg.at(std::string(s.role) + "_2");
        InequalityChain c;
        c.vertex_role = s.role;
        c.terms = {weight(g, prev, v), weight(g, own, v), weight(g, next, v)};
        c.expected = s.expected;
        for (const auto& t : c.terms) c.total += t;
        c.exceeds_one = c.total > dyadic_one();
        out.push_back(std::move(c));
    }
    return out;
}

inline Fact2Report fact2_check(int k, TimeBudget budget = std::nullopt, bool run_unreduced = true) {
    if (k < 2) throw ExperimentError("fact2_check requires k >= 2");
    Fact2Report rep;
    rep.k = k;
    auto lg = gen_Tprime(k);
    const auto& g = lg.graph;
    rep.n = g.order();
    rep.bound_4n_13 = 4 * rep.n / 13;
    rep.chains = fact2_chains();
    rep.chains_certified = std::all_of(rep.chains.begin(), rep.chains.end(), [](const InequalityChain& c) {
        return c.exceeds_one && c.terms == c.expected;
    });

    AlphaOptions opts;
    opts.required = endvertex_set(lg);
    opts.time_budget = budget;
    if (rep.chains_certified)
        for (int i = 2; i <= k - 1; ++i)
            for (const char* role : {"a", "b", "c"})
                opts.excluded = opts.excluded.with(lg.at(indexed(role, i)));
    rep.constrained = alpha_e_exact(g, opts);
    if (!is_exponentially_independent(g, rep.constrained.witness).verdict)
        throw std::logic_error("constrained witness failed re-verification");
    if (run_unreduced) rep.unreduced = alpha_e_exact(g, AlphaOptions{opts.required, {}, budget, true});

    rep.interior_blocks_forced = true;
    for (int i = 2; i <= k - 1; ++i) {
        std::vector<Vertex> in_block;
        for (Vertex v : lg.set(indexed("V", i)))
            if (rep.constrained.witness.contains(v)) in_block.push_back(v);
        if (VertexSet(in_block) != lg.set(indexed("L", i))) rep.interior_blocks_forced = false;
    }
    for (int phase = 0; phase < 3; ++phase) {
        auto s = circles_square_set(k, phase);
        rep.circles_square.emplace_back(s.size(), is_exponentially_independent(g, s).verdict);
    }
    return rep;
}

}  // namespace expind
