#pragma once

// Constructive procedures: distance packings that are exponentially independent,
// the expansion condition, and the recursive good-set algorithm for subcubic trees.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expind/graph.hpp"
#include "expind/solvers.hpp"
#include "expind/weights.hpp"

namespace expind {

struct PackingParams {
    std::uint32_t dstar = 1;
    std::uint32_t min_pairwise_distance() const { return 2 * dstar + 1; }
};

/// ceil(log2(log2(n))) + 2, decided by comparing n against 2^(2^t) in integers.
inline std::uint32_t theorem1_dstar(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("theorem1_dstar requires n >= 4");
    std::uint32_t t = 1;
    // n <= 2^(2^t) <=> log log n <= t
    while (t < 6 && n > (std::uint64_t{1} << (std::uint64_t{1} << t))) ++t;
    return t + 2;
}

/// Vertices within distance `radius` of `source` (source included).
inline std::vector<Vertex> ball(const Graph& g, Vertex source, std::uint32_t radius) {
    std::vector<Vertex> out{source};
    std::vector<std::uint32_t> depth{0};
    std::vector<char> seen(g.order(), 0);
    seen[source] = 1;
    for (std::size_t h = 0; h < out.size(); ++h) {
        if (depth[h] == radius) continue;
        for (Vertex w : g.neighbors(out[h]))
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                depth.push_back(depth[h] + 1);
            }
    }
    return out;
}

/// Maximal set with pairwise distance > 2 * dstar, scanning vertices in ascending id.
inline VertexSet greedy_packing(const Graph& g, std::uint32_t dstar) {
    std::vector<char> covered(g.order(), 0);
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (covered[v]) continue;
        chosen.push_back(v);
        for (Vertex w : ball(g, v, 2 * dstar)) covered[w] = 1;
    }
    return VertexSet(chosen);
}

/// ceil(n / (3 * 2^(2 dstar) - 2)): the size every maximal packing in a subcubic graph reaches.
inline std::uint64_t packing_size_lower_bound(std::uint64_t n, std::uint32_t dstar) {
    if (2 * dstar >= 62) return n > 0 ? 1 : 0;
    std::uint64_t ball_size = 3 * (std::uint64_t{1} << (2 * dstar)) - 2;
    return (n + ball_size - 1) / ball_size;
}

/// |N^d(u)| <= 3 * 2^(d-1) - 1 for every vertex u.
inline bool expansion_condition_holds(const Graph& g, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("expansion condition requires d >= 1");
    if (d > 40) return true;  // a subcubic ball never reaches 3 * 2^39 vertices here
    const std::uint64_t cap = 3 * (std::uint64_t{1} << (d - 1)) - 1;
    for (Vertex u = 0; u < g.order(); ++u) {
        std::vector<Vertex> frontier{u}, next;
        std::vector<char> seen(g.order(), 0);
        seen[u] = 1;
        for (std::uint32_t r = 0; r < d && !frontier.empty(); ++r) {
            next.clear();
            for (Vertex x : frontier)
                for (Vertex w : g.neighbors(x))
                    if (!seen[w]) {
                        seen[w] = 1;
                        next.push_back(w);
                    }
            std::swap(frontier, next);
        }
        if (frontier.size() > cap) return false;
    }
    return true;
}

namespace detail {

/// RAII holder for an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// -1: eps * (2 - eps)^D <= C for sure, +1: > C for sure, 0: undecided at this precision.
inline int compare_expansion_lhs(std::uint32_t d, std::uint64_t dstar, mpfr_prec_t prec) {
    Mpfr q(prec), r_lo(prec), r_hi(prec), e_lo(prec), e_hi(prec), lo(prec), hi(prec), c(prec);
    // q = 2^(2d) - 1 exactly (fits for d <= 31)
    mpfr_set_ui(q.get(), 1, MPFR_RNDN);
    mpfr_mul_2ui(q.get(), q.get(), 2 * d, MPFR_RNDN);
    mpfr_sub_ui(q.get(), q.get(), 1, MPFR_RNDN);
    // r = q^(1/(2d)) = 2 - eps
    mpfr_rootn_ui(r_lo.get(), q.get(), 2 * d, MPFR_RNDD);
    mpfr_rootn_ui(r_hi.get(), q.get(), 2 * d, MPFR_RNDU);
    mpfr_ui_sub(e_lo.get(), 2, r_hi.get(), MPFR_RNDD);
    mpfr_ui_sub(e_hi.get(), 2, r_lo.get(), MPFR_RNDU);
    mpfr_pow_ui(lo.get(), r_lo.get(), dstar, MPFR_RNDD);
    mpfr_mul(lo.get(), lo.get(), e_lo.get(), MPFR_RNDD);
    mpfr_pow_ui(hi.get(), r_hi.get(), dstar, MPFR_RNDU);
    mpfr_mul(hi.get(), hi.get(), e_hi.get(), MPFR_RNDU);
    // C = 3 * 2^(2d+1)
    mpfr_set_ui(c.get(), 3, MPFR_RNDN);
    mpfr_mul_2ui(c.get(), c.get(), 2 * d + 1, MPFR_RNDN);
    if (mpfr_cmp(lo.get(), c.get()) > 0) return 1;
    if (mpfr_cmp(hi.get(), c.get()) <= 0) return -1;
    return 0;
}

}  // namespace detail

/// Does eps * (2 - eps)^dstar > 3 * 2^(2d+1) hold, with (2^(2d) - 1)^(1/(2d)) = 2 - eps?
/// Decided by outward-rounded interval evaluation, widening precision until decided.
inline bool expansion_dstar_condition(std::uint32_t d, std::uint64_t dstar) {
    if (d < 1 || d > 31) throw std::invalid_argument("expansion_dstar_condition requires 1 <= d <= 31");
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        int c = detail::compare_expansion_lhs(d, dstar, prec);
        if (c != 0) return c > 0;
    }
    throw std::runtime_error("expansion_dstar_condition: comparison undecided at maximum precision");
}

/// Least dstar satisfying the expansion condition inequality for this d.
inline std::uint64_t theorem1b_dstar(std::uint32_t d) {
    // The left side grows without bound; find an upper bracket, then bisect (it is increasing in dstar).
    std::uint64_t hi = 1;
    while (!expansion_dstar_condition(d, hi)) hi *= 2;
    std::uint64_t lo = 0;  // condition false at lo (or lo == 0)
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (expansion_dstar_condition(d, mid)) hi = mid; else lo = mid;
    }
    return hi;
}

// ---------------------------------------------------------------------------
// Good sets in subcubic trees

class NotATreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotSubcubicError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(const std::string& what, std::string trace)
        : std::logic_error(what), trace_(std::move(trace)) {}
    const std::string& trace() const { return trace_; }

private:
    std::string trace_;
};

/// One reduction: `removed` leave the tree; on the way back `swapped` (an
/// endvertex of the smaller tree) is replaced by `added`. Ids refer to the input tree.
struct Reduction {
    std::string rule;
    std::vector<Vertex> removed;
    Vertex swapped = 0;
    std::vector<Vertex> added;
};

struct GoodSetTrace {
    std::vector<Reduction> reductions;  // in the order they were applied (outermost first)
    std::string base_rule;              // "exact", "path" or "all-but-one-endvertex"
    std::size_t base_order = 0;
    VertexSet base_set;

    /// Rebuilds the final set from the base set by undoing reductions innermost first.
    VertexSet replay() const {
        VertexSet s = base_set;
        for (auto it = reductions.rbegin(); it != reductions.rend(); ++it) {
            s = s.without(it->swapped);
            for (Vertex v : it->added) s = s.with(v);
        }
        return s;
    }
};

inline void write_trace(std::ostream& out, const GoodSetTrace& t) {
    auto ids = [&](const std::vector<Vertex>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    };
    for (std::size_t i = 0; i < t.reductions.size(); ++i) {
        const auto& r = t.reductions[i];
        out << "step " << i << ' ' << r.rule << " remove ";
        ids(r.removed);
        out << " swap " << r.swapped << " add ";
        ids(r.added);
        out << '\n';
    }
    out << "base " << t.base_rule << " order " << t.base_order << " set ";
    ids(t.base_set.ids());
    out << '\n';
}

inline std::string trace_text(const GoodSetTrace& t) {
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

struct GoodSet {
    VertexSet set;
    GoodSetTrace trace;
};

/// Independent, contains every endvertex, and 4|S| >= n + 3.
inline bool is_good_set(const Graph& t, const VertexSet& s) {
    return 4 * s.size() >= t.order() + 3 && s.includes(endvertices(t)) &&
           is_exponentially_independent(t, s).verdict;
}

namespace detail {

inline constexpr std::size_t kGoodSetBaseOrder = 8;

// Endpoints plus interior picks along a path with gaps in {2,3}: all gaps 3 when
// (n-1) % 3 == 0, one trailing 2 when it is 2, a leading and a trailing 2 when it is 1
// (a single gap of 4 on P_5, where two 2-gaps would meet).
inline std::vector<std::size_t> path_positions(std::size_t n) {
    if (n <= 2) return n == 2 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0};
    if (n == 5) return {0, 4};
    std::size_t len = n - 1;
    std::vector<std::size_t> gaps;
    switch (len % 3) {
        case 0: gaps.assign(len / 3, 3); break;
        case 2: gaps.assign(len / 3, 3); gaps.push_back(2); break;
        default:
            gaps.assign((len - 4) / 3, 3);
            gaps.insert(gaps.begin(), 2);
            gaps.push_back(2);
    }
    std::vector<std::size_t> pos{0};
    for (auto g : gaps) pos.push_back(pos.back() + g);
    return pos;
}

// Vertices of a path graph in order from the smaller-id end.
inline std::vector<Vertex> path_order(const Graph& p) { return longest_path(p); }

struct Level {
    Graph graph;
    std::vector<Vertex> original;  // local id -> input-tree id
};

class GoodSetBuilder {
public:
    explicit GoodSetBuilder(const Graph& t) : top_(t) {}

    GoodSet run() {
        GoodSet out;
        auto& trace = out.trace;
        std::vector<char> alive(top_.order(), 1);
        while (true) {
            auto level = make_level(alive);
            const Graph& t = level.graph;
            if (t.order() <= kGoodSetBaseOrder) {
                auto r = alpha_e_exact(t, endvertices(t));
                trace.base_rule = "exact";
                trace.base_order = t.order();
                trace.base_set = lift_ids(level, r.witness);
                break;
            }
            if (max_degree(t) <= 2) {
                auto order = path_order(t);
                std::vector<Vertex> picks;
                for (auto p : path_positions(t.order())) picks.push_back(level.original[order[p]]);
                trace.base_rule = "path";
                trace.base_order = t.order();
                trace.base_set = VertexSet(picks);
                break;
            }
            if (degree2_vertices(t).empty())
                fail("reduced tree of order " + std::to_string(t.order()) + " has no vertex of degree 2", trace);
            Reduction red = choose(t, trace);
            for (auto& v : red.removed) v = level.original[v];
            red.swapped = level.original[red.swapped];
            for (auto& v : red.added) v = level.original[v];
            for (Vertex v : red.removed) alive[v] = 0;
            trace.reductions.push_back(std::move(red));
        }

        // Undo reductions innermost first, verifying every lifted set on its tree.
        VertexSet s = trace.base_set;
        check_good(alive, s, trace, "base");
        for (auto it = trace.reductions.rbegin(); it != trace.reductions.rend(); ++it) {
            for (Vertex v : it->removed) alive[v] = 1;
            if (!s.contains(it->swapped)) fail("swapped vertex " + std::to_string(it->swapped) + " missing from set", trace);
            s = s.without(it->swapped);
            for (Vertex v : it->added) s = s.with(v);
            check_good(alive, s, trace, it->rule);
        }
        out.set = s;
        return out;
    }

private:
    const Graph& top_;

    Level make_level(const std::vector<char>& alive) const {
        auto ind = top_.induced(alive);
        return {std::move(ind.graph), std::move(ind.original)};
    }

    static VertexSet lift_ids(const Level& level, const VertexSet& local) {
        std::vector<Vertex> out;
        for (Vertex v : local) out.push_back(level.original[v]);
        return VertexSet(out);
    }

    [[noreturn]] static void fail(const std::string& what, const GoodSetTrace& trace) {
        throw InvariantViolation("tree_good_set invariant violation: " + what, trace_text(trace));
    }

    void check_good(const std::vector<char>& alive, const VertexSet& s, const GoodSetTrace& trace,
                    const std::string& stage) const {
        auto level = make_level(alive);
        std::vector<Vertex> local_of(top_.order(), 0);
        for (Vertex i = 0; i < level.original.size(); ++i) local_of[level.original[i]] = i;
        std::vector<Vertex> local;
        for (Vertex v : s) {
            if (!alive[v]) fail("set member " + std::to_string(v) + " not in tree after " + stage, trace);
            local.push_back(local_of[v]);
        }
        if (!is_good_set(level.graph, VertexSet(local)))
            fail("set is not good after " + stage + " (tree order " + std::to_string(level.graph.order()) + ")", trace);
    }

    static Vertex other_neighbor(const Graph& t, Vertex v, std::initializer_list<Vertex> exclude) {
        for (Vertex w : t.neighbors(v))
            if (std::find(exclude.begin(), exclude.end(), w) == exclude.end()) return w;
        throw std::logic_error("no other neighbor");
    }

    Reduction choose(const Graph& t, const GoodSetTrace& trace) const {
        // R1: a vertex with two endvertex neighbors.
        for (Vertex v = 0; v < t.order(); ++v) {
            std::vector<Vertex> leaves;
            for (Vertex w : t.neighbors(v))
                if (t.degree(w) == 1) leaves.push_back(w);
            if (leaves.size() >= 2) return {"R1", {leaves[0], leaves[1]}, v, {leaves[0], leaves[1]}};
        }
        return along_path(t, longest_path(t), trace, true);
    }

    Reduction along_path(const Graph& t, const std::vector<Vertex>& w, const GoodSetTrace& trace,
                         bool allow_reorient) const {
        // w[0] .. w[d-1] correspond to w_1 .. w_d.
        std::size_t k = 0;
        while (k < w.size() && t.degree(w[k]) != 3) ++k;
        if (k == w.size()) fail("longest path has no vertex of degree 3", trace);
        const std::size_t idx = k + 1;  // 1-based position of the first degree-3 vertex
        if (idx >= 5) return {"R2", {w[0], w[1], w[2]}, w[3], {w[0], w[2]}};
        if (idx == 3) {
            Vertex w2p = other_neighbor(t, w[2], {w[1], w[3]});
            if (t.degree(w2p) == 1) return {"R3a", {w[0], w[1], w2p}, w[2], {w[0], w2p}};
            if (t.degree(w2p) == 2) {
                Vertex w1p = other_neighbor(t, w2p, {w[2]});
                if (t.degree(w1p) == 1) return {"R3b", {w[0], w1p, w2p}, w[1], {w[0], w1p}};
            }
            fail("unexpected branch at w_3 (vertex " + std::to_string(w[2]) + ")", trace);
        }
        if (idx == 4) {
            Vertex w3p = other_neighbor(t, w[3], {w[2], w[4]});
            if (t.degree(w3p) == 1) return {"R4a", {w[0], w[1], w[2], w3p}, w[3], {w[0], w3p}};
            if (t.degree(w3p) == 2) {
                Vertex w2p = other_neighbor(t, w3p, {w[3]});
                if (t.degree(w2p) == 1) return {"R4b", {w[0], w[1], w2p, w3p}, w[2], {w[0], w2p}};
                if (t.degree(w2p) == 2) {
                    Vertex w1p = other_neighbor(t, w2p, {w3p});
                    if (t.degree(w1p) == 1) return {"R4c", {w[0], w1p, w2p, w3p}, w[1], {w[0], w1p}};
                }
            }
            // The branch at w_4 is not a short path: a leaf three steps below w_3'
            // starts another longest path whose first degree-3 vertex is w_3'.
            if (allow_reorient && t.degree(w3p) == 3) {
                for (Vertex x : t.neighbors(w3p)) {
                    if (x == w[3]) continue;
                    for (Vertex leaf : t.neighbors(x))
                        if (leaf != w3p && t.degree(leaf) == 1) {
                            std::vector<Vertex> alt{leaf, x, w3p};
                            alt.insert(alt.end(), w.begin() + 3, w.end());
                            return along_path(t, alt, trace, false);
                        }
                }
            }
            fail("unexpected branch at w_4 (vertex " + std::to_string(w[3]) + ")", trace);
        }
        fail("first degree-3 vertex at position " + std::to_string(idx) + " on a longest path", trace);
    }
};

}  // namespace detail

/// Good set of a subcubic tree: exponentially independent, containing every
/// endvertex, of order at least (n + 3) / 4. A tree without a vertex of degree 2
/// instead gets all endvertices but the largest-id one (order n / 2), and that
/// set need not contain every endvertex.
inline GoodSet tree_good_set(const Graph& t) {
    if (!is_tree(t)) throw NotATreeError("tree_good_set requires a tree");
    if (!is_subcubic(t)) throw NotSubcubicError("tree_good_set requires maximum degree <= 3");
    if (t.order() < 2) throw NotATreeError("tree_good_set requires at least 2 vertices");
    if (degree2_vertices(t).empty()) {
        GoodSet out;
        auto leaves = endvertices(t);
        out.set = leaves.without(leaves.ids().back());
        out.trace.base_rule = "all-but-one-endvertex";
        out.trace.base_order = t.order();
        out.trace.base_set = out.set;
        if (!is_exponentially_independent(t, out.set).verdict)
            throw InvariantViolation("all-but-one-endvertex set is not independent", trace_text(out.trace));
        return out;
    }
    return detail::GoodSetBuilder(t).run();
}

}  // namespace expind
