#pragma once

// Exact optimization of alpha_e (maximum exponentially independent set) and
// gamma_e (minimum exponentially dominating set), plus small structural searches.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expind/graph.hpp"
#include "expind/weights.hpp"

namespace expind {

enum class SearchStatus { Optimal, TimedOut };

struct SearchResult {
    std::size_t optimum = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    SearchStatus status = SearchStatus::Optimal;
};

inline void write_search_result(std::ostream& out, const std::string& parameter, const SearchResult& r) {
    out << "parameter " << parameter << '\n';
    out << "status " << (r.status == SearchStatus::Optimal ? "optimal" : "timed_out") << '\n';
    out << "optimum " << r.optimum << '\n';
    out << "nodes " << r.nodes_explored << '\n';
    out << "witness";
    for (Vertex v : r.witness) out << ' ' << v;
    out << '\n';
}

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SearchLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using TimeBudget = std::optional<std::chrono::milliseconds>;

namespace detail {

class Deadline {
public:
    explicit Deadline(TimeBudget budget) {
        if (budget) end_ = std::chrono::steady_clock::now() + *budget;
    }
    bool expired() {
        if (!end_) return false;
        if (++tick_ % 256 != 0) return expired_;
        expired_ = std::chrono::steady_clock::now() >= *end_;
        return expired_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
    std::uint64_t tick_ = 0;
    bool expired_ = false;
};

class AlphaSearch {
public:
    AlphaSearch(const Graph& g, bool incremental, TimeBudget budget)
        : g_(g), engine_(g), in_(g.order(), 0), incremental_(incremental), deadline_(budget) {}

    SearchResult run(const VertexSet& required, const VertexSet& excluded) {
        for (Vertex v : required) add(v);
        if (!engine_.independent(in_, members_)) throw InfeasibleError("required set is not exponentially independent");
        best_ = members_;
        std::vector<Vertex> cands;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (!in_[v] && !excluded.contains(v) && fits(v)) cands.push_back(v);
        descend(cands);
        SearchResult r;
        r.witness = VertexSet(best_);
        r.optimum = best_.size();
        r.nodes_explored = nodes_;
        r.status = timed_out_ ? SearchStatus::TimedOut : SearchStatus::Optimal;
        return r;
    }

private:
    const Graph& g_;
    WeightEngine engine_;
    std::vector<char> in_;
    std::vector<Vertex> members_;
    std::vector<Vertex> best_;
    std::vector<Vertex> reached_;
    bool incremental_;
    Deadline deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;

    void add(Vertex v) {
        in_[v] = 1;
        members_.push_back(v);
    }
    void remove_last() {
        in_[members_.back()] = 0;
        members_.pop_back();
    }

    // Is members + v still independent? Only v and the members whose blocked
    // distance to v is finite can change weight when v joins.
    bool fits(Vertex v) {
        add(v);
        bool ok;
        if (incremental_) {
            ok = !engine_.others_reach_one(v, in_, reached_);
            if (ok) {
                auto touched = reached_;
                for (Vertex u : touched)
                    if (engine_.others_reach_one(u, in_)) {
                        ok = false;
                        break;
                    }
            }
        } else {
            ok = engine_.independent(in_, members_);
        }
        remove_last();
        return ok;
    }

    // Include-first over ascending ids with strict improvement only, so the first
    // optimum found is the lexicographically smallest one.
    void descend(const std::vector<Vertex>& cands) {
        ++nodes_;
        if (members_.size() > best_.size()) best_ = members_;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (members_.size() + (cands.size() - i) <= best_.size()) return;
            if (deadline_.expired()) {
                timed_out_ = true;
                return;
            }
            Vertex v = cands[i];
            add(v);
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (fits(cands[j])) next.push_back(cands[j]);
            descend(next);
            remove_last();
            if (timed_out_) return;
        }
    }
};

}  // namespace detail

struct AlphaOptions {
    VertexSet required;
    VertexSet excluded;  // vertices the caller has already ruled out
    TimeBudget time_budget;
    bool incremental = true;  // false re-verifies the whole set on every candidate test
};

/// Maximum exponentially independent superset of `required`, by branch and bound.
/// Candidates that break independence are dropped for the whole subtree, which is
/// sound because independence is inherited by subsets.
inline SearchResult alpha_e_exact(const Graph& g, const AlphaOptions& opts = {}) {
    detail::AlphaSearch search(g, opts.incremental, opts.time_budget);
    return search.run(opts.required, opts.excluded);
}

inline SearchResult alpha_e_exact(const Graph& g, const VertexSet& required, TimeBudget budget = std::nullopt) {
    return alpha_e_exact(g, AlphaOptions{required, {}, budget, true});
}

inline constexpr std::size_t kBruteforceMaxOrder = 20;

/// Ground truth by enumeration of all 2^n subsets through the dyadic verifier.
inline SearchResult alpha_e_bruteforce(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kBruteforceMaxOrder) throw SearchLimitError("brute force limited to n <= 20");
    SearchResult r;
    r.witness = {};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ++r.nodes_explored;
        std::vector<Vertex> ids;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) ids.push_back(v);
        if (ids.size() < r.optimum) continue;
        VertexSet s(ids);
        if (ids.size() == r.optimum && !(s < r.witness)) continue;
        if (!is_exponentially_independent(g, s).verdict) continue;
        r.optimum = ids.size();
        r.witness = s;
    }
    return r;
}

namespace detail {

// Calls visit(combination) for every size-s subset of [0, n) in lexicographic
// order; stops early when visit returns true. Returns whether it stopped early.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t s, Visit&& visit) {
    if (s > n) return false;
    std::vector<Vertex> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<Vertex>(i);
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline VertexSet greedy_dominating(const Graph& g) {
    WeightEngine engine(g);
    std::vector<char> in(g.order(), 0);
    auto undominated = [&] {
        std::size_t c = 0;
        for (Vertex u = 0; u < g.order(); ++u) c += !engine.dominated(u, in);
        return c;
    };
    std::size_t left = undominated();
    while (left > 0) {
        Vertex best = 0;
        std::size_t best_left = left + 1;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (in[v]) continue;
            in[v] = 1;
            auto c = undominated();
            in[v] = 0;
            if (c < best_left) {
                best_left = c;
                best = v;
            }
        }
        in[best] = 1;
        left = best_left;
    }
    return VertexSet::from_mask(in);
}

inline SearchResult gamma_connected(const Graph& g, Deadline& deadline) {
    SearchResult r;
    WeightEngine engine(g);
    std::vector<char> in(g.order(), 0);
    for (std::size_t s = 1; s <= g.order(); ++s) {
        bool timed_out = false;
        bool found = for_each_combination(g.order(), s, [&](const std::vector<Vertex>& idx) {
            ++r.nodes_explored;
            if (deadline.expired()) return timed_out = true;
            for (Vertex v : idx) in[v] = 1;
            bool ok = engine.dominating(in);
            for (Vertex v : idx) in[v] = 0;
            if (ok) r.witness = VertexSet(idx);
            return ok;
        });
        if (timed_out) {
            r.status = SearchStatus::TimedOut;
            r.witness = greedy_dominating(g);
            r.optimum = r.witness.size();
            return r;
        }
        if (found) {
            r.optimum = s;
            return r;
        }
    }
    return r;  // unreachable for n >= 1: V(G) dominates
}

}  // namespace detail

/// Minimum exponentially dominating set by increasing subset size; no monotonicity
/// is assumed, since adding vertices can block influence. Disconnected graphs are
/// solved per component.
inline SearchResult gamma_e_exact(const Graph& g, TimeBudget budget = std::nullopt) {
    detail::Deadline deadline(budget);
    SearchResult total;
    if (g.order() == 0) return total;
    for (const auto& comp : connected_components(g)) {
        std::vector<char> keep(g.order(), 0);
        for (Vertex v : comp) keep[v] = 1;
        auto sub = g.induced(keep);
        auto r = detail::gamma_connected(sub.graph, deadline);
        std::vector<Vertex> mapped;
        for (Vertex v : r.witness) mapped.push_back(sub.original[v]);
        total.witness = total.witness.united(VertexSet(mapped));
        total.optimum += r.optimum;
        total.nodes_explored += r.nodes_explored;
        if (r.status == SearchStatus::TimedOut) total.status = SearchStatus::TimedOut;
    }
    return total;
}

/// A set that is exponentially independent, maximal under single-vertex additions,
/// and not exponentially dominating; the first by (size, lexicographic) order.
inline std::optional<VertexSet> find_maximal_ei_not_ed(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kBruteforceMaxOrder) throw SearchLimitError("exhaustive search limited to n <= 20");
    WeightEngine engine(g);
    std::vector<char> in(n, 0);
    std::optional<VertexSet> found;
    for (std::size_t s = 1; s <= n && !found; ++s) {
        detail::for_each_combination(n, s, [&](const std::vector<Vertex>& idx) {
            for (Vertex v : idx) in[v] = 1;
            bool hit = engine.independent(in, idx) && !engine.dominating(in);
            if (hit) {
                auto members = idx;
                for (Vertex v = 0; v < n && hit; ++v) {
                    if (in[v]) continue;
                    in[v] = 1;
                    members.push_back(v);
                    if (engine.independent(in, members)) hit = false;
                    members.pop_back();
                    in[v] = 0;
                }
            }
            for (Vertex v : idx) in[v] = 0;
            if (hit) found = VertexSet(idx);
            return hit;
        });
    }
    return found;
}

}  // namespace expind
