#pragma once

// Influence weights under blocking, and the two set verifiers built on them.
//
// The weight of u with respect to S is the sum over v in S of 2^(1 - d), where d is
// the distance from u to v once every other member of S is deleted. Unreachable
// members contribute nothing. All verdicts are decided in exact dyadic arithmetic.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "expind/dyadic.hpp"
#include "expind/graph.hpp"

namespace expind {

inline Distance blocked_distance(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
    if (u == v) return Distance::finite(0);
    auto mask = s.mask(g.order());
    mask[v] = 1;  // v is the target: enterable, never expanded
    return absorbing_bfs(g, u, mask)[v];
}

inline Dyadic influence(Distance d) {
    if (!d.is_finite()) return Dyadic{};
    return Dyadic::pow2(1 - static_cast<long long>(d.hops()));
}

struct Contribution {
    Vertex from;
    Distance distance;
    Dyadic amount;
};

namespace detail {

inline Dyadic sum_from_distances(const std::vector<Distance>& dist, const VertexSet& s, std::optional<Vertex> skip,
                                 std::vector<Contribution>* contributions) {
    std::vector<std::uint64_t> counts;
    for (Vertex v : s) {
        if (skip && *skip == v) continue;
        if (!dist[v].is_finite()) continue;
        auto h = dist[v].hops();
        if (counts.size() <= h) counts.resize(h + 1, 0);
        ++counts[h];
        if (contributions) contributions->push_back({v, dist[v], influence(dist[v])});
    }
    return Dyadic::from_power_counts(counts, 1);
}

}  // namespace detail

/// w_(G,S)(u). If u is in S it contributes its own self term 2.
inline Dyadic weight(const Graph& g, const VertexSet& s, Vertex u) {
    auto dist = absorbing_bfs(g, u, s.mask(g.order()));
    return detail::sum_from_distances(dist, s, std::nullopt, nullptr);
}

struct VertexWeight {
    Vertex vertex;
    Dyadic weight;
    std::vector<Contribution> contributions;  // ascending by source vertex
};

/// Per-vertex weight decomposition plus the verdict of a verifier run.
struct WeightReport {
    enum class Mode { Independent, Dominating };

    Mode mode = Mode::Independent;
    bool verdict = true;
    std::optional<Vertex> first_violation;
    std::vector<VertexWeight> entries;  // ascending by vertex id

    const VertexWeight* find(Vertex u) const {
        for (const auto& e : entries)
            if (e.vertex == u) return &e;
        return nullptr;
    }
};

inline void write_report(std::ostream& out, const WeightReport& r) {
    out << "mode " << (r.mode == WeightReport::Mode::Independent ? "ei" : "ed") << '\n';
    out << "verdict " << (r.verdict ? "true" : "false") << '\n';
    if (r.first_violation) out << "first_violation " << *r.first_violation << '\n';
    for (const auto& e : r.entries) {
        out << e.vertex << " w=" << e.weight.str() << " (" << e.weight.decimal() << ")\n";
        for (const auto& c : e.contributions)
            out << "  from " << c.from << " dist=" << c.distance << " c=" << c.amount.str() << '\n';
    }
}

inline std::string report_text(const WeightReport& r) {
    std::ostringstream os;
    write_report(os, r);
    return os.str();
}

/// Every u in S must satisfy w_(G, S - u)(u) < 1. Entries cover exactly the members of S.
inline WeightReport is_exponentially_independent(const Graph& g, const VertexSet& s) {
    WeightReport r;
    r.mode = WeightReport::Mode::Independent;
    auto mask = s.mask(g.order());
    for (Vertex u : s) {
        VertexWeight e{u, {}, {}};
        auto dist = absorbing_bfs(g, u, mask);
        e.weight = detail::sum_from_distances(dist, s, u, &e.contributions);
        if (!(e.weight < dyadic_one()) && r.verdict) {
            r.verdict = false;
            r.first_violation = u;
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

/// Every vertex u of G must satisfy w_(G,S)(u) >= 1. Entries cover all vertices.
inline WeightReport is_exponentially_dominating(const Graph& g, const VertexSet& s) {
    WeightReport r;
    r.mode = WeightReport::Mode::Dominating;
    auto mask = s.mask(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexWeight e{u, {}, {}};
        auto dist = absorbing_bfs(g, u, mask);
        e.weight = detail::sum_from_distances(dist, s, std::nullopt, &e.contributions);
        if (e.weight < dyadic_one() && r.verdict) {
            r.verdict = false;
            r.first_violation = u;
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

/// Allocation-free verdict engine for hot loops (search, Monte Carlo).
///
/// Each query runs one absorbing BFS that only touches the vertices it reaches,
/// so the cost is proportional to the reached region rather than to n.
class WeightEngine {
public:
    explicit WeightEngine(const Graph& g) : g_(&g), dist_(g.order(), 0), stamp_(g.order(), 0) {}

    /// Is w_(G, S - u)(u) >= 1, where S is given by `in_set` (u may or may not be in it)?
    bool others_reach_one(Vertex u, const std::vector<char>& in_set) {
        histogram(u, in_set, nullptr);
        return at_least_one();
    }

    /// Same as above, also listing the members of S - u the BFS reached.
    bool others_reach_one(Vertex u, const std::vector<char>& in_set, std::vector<Vertex>& reached) {
        reached.clear();
        histogram(u, in_set, &reached);
        return at_least_one();
    }

    /// Is w_(G,S)(u) >= 1?
    bool dominated(Vertex u, const std::vector<char>& in_set) {
        if (in_set[u]) return true;
        return others_reach_one(u, in_set);
    }

    bool independent(const std::vector<char>& in_set, const std::vector<Vertex>& members) {
        for (Vertex u : members)
            if (others_reach_one(u, in_set)) return false;
        return true;
    }

    bool dominating(const std::vector<char>& in_set) {
        for (Vertex u = 0; u < g_->order(); ++u)
            if (!dominated(u, in_set)) return false;
        return true;
    }

private:
    const Graph* g_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<Vertex> queue_;
    std::vector<std::uint64_t> counts_;  // counts_[d] members of S - u at blocked distance d

    void histogram(Vertex u, const std::vector<char>& in_set, std::vector<Vertex>* reached) {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        counts_.clear();
        queue_.clear();
        queue_.push_back(u);
        stamp_[u] = epoch_;
        dist_[u] = 0;
        for (std::size_t h = 0; h < queue_.size(); ++h) {
            Vertex x = queue_[h];
            if (x != u && in_set[x]) {
                auto d = dist_[x];
                if (counts_.size() <= d) counts_.resize(d + 1, 0);
                ++counts_[d];
                if (reached) reached->push_back(x);
                continue;
            }
            for (Vertex y : g_->neighbors(x))
                if (stamp_[y] != epoch_) {
                    stamp_[y] = epoch_;
                    dist_[y] = dist_[x] + 1;
                    queue_.push_back(y);
                }
        }
    }

    // sum_{d>=1} counts[d] * 2^(1-d) >= 1, decided by carrying halves toward d = 1.
    bool at_least_one() {
        if (counts_.size() < 2) return false;
        if (counts_[1] > 0) return true;
        std::uint64_t carry = 0;
        for (std::size_t d = counts_.size() - 1; d >= 2; --d) carry = (counts_[d] + carry) / 2;
        return carry >= 1;
    }
};

}  // namespace expind
