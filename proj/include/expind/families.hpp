#pragma once

// Deterministic generators for the extremal tree families, random subcubic
// corpora, and exhaustive tree enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "expind/graph.hpp"
#include "expind/random.hpp"
#include "expind/weights.hpp"

namespace expind {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph plus named roles: single vertices ("a_3") and vertex sets ("L_2").
struct LabeledGraph {
    Graph graph;
    std::map<std::string, Vertex> vertices;
    std::map<std::string, VertexSet> sets;

    Vertex at(const std::string& role) const {
        auto it = vertices.find(role);
        if (it == vertices.end()) throw FamilyError("no vertex labeled " + role);
        return it->second;
    }
    const VertexSet& set(const std::string& role) const {
        auto it = sets.find(role);
        if (it == sets.end()) throw FamilyError("no set labeled " + role);
        return it->second;
    }
};

/// Sidecar format: one "role vertex_id" line per labeled vertex and per set member.
inline void write_labels(std::ostream& out, const LabeledGraph& lg) {
    for (const auto& [role, v] : lg.vertices) out << role << ' ' << v << '\n';
    for (const auto& [role, s] : lg.sets)
        for (Vertex v : s) out << role << ' ' << v << '\n';
}

inline std::string indexed(const std::string& role, long long i) { return role + "_" + std::to_string(i); }

// ---------------------------------------------------------------------------
// T_k: k blocks u_i - m_i - l_i on the spine u_1 ... u_k, with pendant paths
// p1 - p2 at u_1 and q1 - q2 at u_k. Order 3k + 4.

inline LabeledGraph gen_Tk(int k) {
    if (k < 1) throw FamilyError("T_k requires k >= 1");
    LabeledGraph lg;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto base = [](int i) { return static_cast<Vertex>(3 * (i - 1)); };
    std::vector<Vertex> leaves;
    for (int i = 1; i <= k; ++i) {
        Vertex u = base(i), m = u + 1, l = u + 2;
        edges.emplace_back(u, m);
        edges.emplace_back(m, l);
        if (i < k) edges.emplace_back(u, base(i + 1));
        lg.vertices[indexed("u", i)] = u;
        lg.vertices[indexed("m", i)] = m;
        lg.vertices[indexed("l", i)] = l;
        lg.sets[indexed("V", i)] = VertexSet{u, m, l};
        leaves.push_back(l);
    }
    auto p1 = static_cast<Vertex>(3 * k), p2 = p1 + 1, q1 = p1 + 2, q2 = p1 + 3;
    edges.emplace_back(p1, base(1));
    edges.emplace_back(p2, p1);
    edges.emplace_back(q1, base(k));
    edges.emplace_back(q2, q1);
    lg.vertices["p1"] = p1;
    lg.vertices["p2"] = p2;
    lg.vertices["q1"] = q1;
    lg.vertices["q2"] = q2;
    leaves.push_back(p2);
    leaves.push_back(q2);
    lg.graph = Graph(static_cast<std::size_t>(3 * k + 4), edges);
    lg.sets["endvertices"] = VertexSet(leaves);
    return lg;
}

/// All k + 2 endvertices of T_k.
inline VertexSet canonical_set_Tk(int k) { return gen_Tk(k).set("endvertices"); }

// ---------------------------------------------------------------------------
// T'_k: k blocks of 13 vertices. Within block i:
//   spine     a - m1 - m2 - m3
//   upper     a - b - r1 - r2
//   lower     m1 - c - s1 - s2
//   left      m2 - x - y1 - y2
// and b_i - a_(i+1) joins consecutive blocks. L_i = {m3, r2, s2, y2}.

namespace tprime {
enum Offset : Vertex { A = 0, M1, M2, M3, B, R1, R2, C, S1, S2, X, Y1, Y2, BlockSize };
}

inline LabeledGraph gen_Tprime_unchecked(int k) {
    using namespace tprime;
    if (k < 1) throw FamilyError("T'_k requires k >= 1");
    LabeledGraph lg;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> leaves;
    static const char* names[] = {"a", "m1", "m2", "m3", "b", "r1", "r2", "c", "s1", "s2", "x", "y1", "y2"};
    for (int i = 1; i <= k; ++i) {
        Vertex o = static_cast<Vertex>(BlockSize * (i - 1));
        auto at = [o](Vertex off) { return o + off; };
        for (auto [p, q] : {std::pair{A, M1}, {M1, M2}, {M2, M3}, {A, B}, {B, R1}, {R1, R2}, {M1, C}, {C, S1},
                            {S1, S2}, {M2, X}, {X, Y1}, {Y1, Y2}})
            edges.emplace_back(at(p), at(q));
        if (i < k) edges.emplace_back(at(B), at(A) + BlockSize);
        std::vector<Vertex> block;
        for (Vertex off = 0; off < BlockSize; ++off) {
            lg.vertices[indexed(names[off], i)] = at(off);
            block.push_back(at(off));
        }
        lg.sets[indexed("V", i)] = VertexSet(block);
        lg.sets[indexed("L", i)] = VertexSet{at(M3), at(R2), at(S2), at(Y2)};
        for (Vertex l : {at(M3), at(R2), at(S2), at(Y2)}) leaves.push_back(l);
    }
    lg.graph = Graph(static_cast<std::size_t>(BlockSize) * static_cast<std::size_t>(k), edges);
    lg.sets["endvertices"] = VertexSet(leaves);
    return lg;
}

class FamilySelfCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// T'_k, rejected unless the block topology reproduces the weight 11/32 of
/// L_2 at b_1 (checked whenever k >= 2).
inline LabeledGraph gen_Tprime(int k) {
    auto lg = gen_Tprime_unchecked(k);
    if (k >= 2) {
        auto w = weight(lg.graph, lg.set("L_2"), lg.at("b_1"));
        if (w != Dyadic(11, 5)) throw FamilySelfCheckError("T'_k self-check failed: w(b_1; L_2) = " + w.str());
    }
    return lg;
}

inline VertexSet endvertex_set(const LabeledGraph& lg) { return endvertices(lg.graph); }

/// Per block: y2, s2, r2 and the degree-2 vertex x (m3 is left out); plus c_i for
/// every block index i with i mod 3 == phase.
inline VertexSet circles_square_set(int k, int phase) {
    using namespace tprime;
    if (k < 1) throw FamilyError("T'_k requires k >= 1");
    if (phase < 0 || phase > 2) throw FamilyError("phase must be 0, 1 or 2");
    std::vector<Vertex> ids;
    for (int i = 1; i <= k; ++i) {
        Vertex o = static_cast<Vertex>(BlockSize * (i - 1));
        for (Vertex off : {Y2, S2, R2, X}) ids.push_back(o + off);
        if (i % 3 == phase) ids.push_back(o + C);
    }
    return VertexSet(ids);
}

/// Circle vertices only (no squares).
inline VertexSet circles_set(int k) {
    using namespace tprime;
    std::vector<Vertex> ids;
    for (int i = 1; i <= k; ++i)
        for (Vertex off : {Y2, S2, R2, X}) ids.push_back(static_cast<Vertex>(BlockSize * (i - 1)) + off);
    return VertexSet(ids);
}

// ---------------------------------------------------------------------------
// Rooted regular trees, numbered in BFS order (children of a vertex are contiguous
// and ascending).

namespace detail {

inline LabeledGraph rooted_tree(int root_children, int other_children, int depth) {
    LabeledGraph lg;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> level{0};
    lg.sets["depth_0"] = VertexSet{0};
    Vertex next = 1;
    for (int d = 1; d <= depth; ++d) {
        std::vector<Vertex> nl;
        for (Vertex p : level) {
            int kids = (d == 1) ? root_children : other_children;
            for (int c = 0; c < kids; ++c) {
                edges.emplace_back(p, next);
                nl.push_back(next++);
            }
        }
        level = std::move(nl);
        lg.sets[indexed("depth", d)] = VertexSet(level);
    }
    lg.graph = Graph(next, edges);
    lg.vertices["root"] = 0;
    lg.sets["leaves"] = lg.sets[indexed("depth", depth)];
    return lg;
}

}  // namespace detail

/// T(Delta, d): non-leaves have degree Delta, all leaves at depth d.
inline LabeledGraph gen_TDelta(int delta, int d) {
    if (delta < 3) throw FamilyError("T(Delta,d) requires Delta >= 3");
    if (d < 0) throw FamilyError("T(Delta,d) requires d >= 0");
    return detail::rooted_tree(delta, delta - 1, d);
}

/// Perfect binary tree of depth k (n = 2^(k+1) - 1).
inline LabeledGraph gen_perfect_binary(int k) {
    if (k < 0) throw FamilyError("depth must be >= 0");
    return detail::rooted_tree(2, 2, k);
}

inline VertexSet leaf_set(const LabeledGraph& pbt) { return pbt.set("leaves"); }

/// On T(4, d+2): one grandchild of every vertex at depth d. Without a seed the
/// first child's first child is taken; with a seed the grandchild is drawn at random.
inline VertexSet grandchild_set(int d, std::optional<std::uint64_t> seed = std::nullopt) {
    if (d < 1) throw FamilyError("grandchild_set requires d >= 1");
    auto t = gen_TDelta(4, d + 2);
    const auto& g = t.graph;
    auto children = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v))
            if (w > v) out.push_back(w);
        return out;
    };
    std::optional<SplitMix64> rng;
    if (seed) rng.emplace(*seed);
    std::vector<Vertex> out;
    for (Vertex v : t.set(indexed("depth", d))) {
        auto kids = children(v);
        Vertex c = rng ? kids[rng->below(kids.size())] : kids.front();
        auto grand = children(c);
        out.push_back(rng ? grand[rng->below(grand.size())] : grand.front());
    }
    return VertexSet(out);
}

// ---------------------------------------------------------------------------
// Paths, cycles, random subcubic corpora

inline Graph gen_path(std::size_t n) {
    if (n < 1) throw FamilyError("path requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph gen_cycle(std::size_t n) {
    if (n < 3) throw FamilyError("cycle requires n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, edges);
}

/// Grows a tree by attaching vertex v to a uniformly chosen earlier vertex of degree < 3.
inline Graph random_subcubic_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw FamilyError("tree requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> deg(n, 0);
    std::vector<Vertex> open{0};  // vertices with degree < 3
    for (Vertex v = 1; v < n; ++v) {
        auto idx = rng.below(open.size());
        Vertex p = open[idx];
        edges.emplace_back(p, v);
        if (++deg[p] == 3) {
            open[idx] = open.back();
            open.pop_back();
        }
        ++deg[v];
        open.push_back(v);
    }
    return Graph(n, edges);
}

/// Random subcubic tree plus `extra_edges` edges between non-adjacent vertices of degree < 3.
inline Graph random_subcubic_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
    auto tree = random_subcubic_tree(n, seed);
    SplitMix64 rng(counter_hash(seed, 0xED6E));
    auto edges = tree.edges();
    std::vector<int> deg(n);
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for (std::size_t added = 0; added < extra_edges; ++added) {
        std::vector<Vertex> open;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] < 3) open.push_back(v);
        std::optional<std::pair<Vertex, Vertex>> pick;
        for (int attempt = 0; attempt < 64 && !pick && open.size() >= 2; ++attempt) {
            Vertex u = open[rng.below(open.size())], v = open[rng.below(open.size())];
            if (u != v && !adj[u].count(v)) pick = std::pair{std::min(u, v), std::max(u, v)};
        }
        if (!pick) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (std::size_t i = 0; i < open.size(); ++i)
                for (std::size_t j = i + 1; j < open.size(); ++j)
                    if (!adj[open[i]].count(open[j])) pairs.emplace_back(open[i], open[j]);
            if (pairs.empty())
                throw FamilyError("cannot add " + std::to_string(extra_edges) + " extra edges without exceeding degree 3");
            pick = pairs[rng.below(pairs.size())];
        }
        auto [u, v] = *pick;
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Tree enumeration

/// Isomorphism-invariant code of a tree: AHU parenthesis encoding rooted at the
/// center (the smaller encoding when there are two centers).
inline std::string tree_canonical_code(const Graph& t) {
    const std::size_t n = t.order();
    if (n == 0) return "";
    if (n == 1) return "()";
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
        std::vector<std::string> kids;
        for (Vertex w : t.neighbors(v))
            if (w != parent) kids.push_back(encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        return s + ")";
    };
    const Vertex none = static_cast<Vertex>(n);
    if (layer.size() == 1) return encode(layer[0], none);
    auto a = encode(layer[0], layer[1]);
    auto b = encode(layer[1], layer[0]);
    // Two centers: root at the central edge.
    return "[" + std::min(a, b) + std::max(a, b) + "]";
}

inline Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& seq) {
    if (n == 1) return Graph(1, {});
    std::vector<std::size_t> deg(n, 1);
    for (Vertex v : seq) ++deg[v];
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n - 1);
    // Linear-time decoding with a moving pointer to the smallest leaf.
    Vertex ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex v : seq) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min<Vertex>(leaf, static_cast<Vertex>(n - 1)), std::max<Vertex>(leaf, static_cast<Vertex>(n - 1)));
    return Graph(n, edges);
}

/// Visits every labeled tree on n vertices (Pruefer order) with maximum degree at
/// most `max_degree` (0 means unbounded). With `dedupe`, only the first tree of
/// each isomorphism class is visited. Returns the number of trees visited.
inline std::size_t for_each_tree(std::size_t n, std::size_t max_degree, bool dedupe,
                                 const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw FamilyError("tree enumeration requires n >= 1");
    std::unordered_set<std::string> seen;
    std::size_t count = 0;
    auto emit = [&](const Graph& t) {
        if (dedupe && !seen.insert(tree_canonical_code(t)).second) return;
        ++count;
        visit(t);
    };
    if (n <= 2) {
        emit(n == 1 ? Graph(1, {}) : Graph(2, {{0, 1}}));
        return count;
    }
    // Sequences in lexicographic order; a vertex of degree d appears d - 1 times,
    // so prefixes that already exceed the cap are cut off.
    const std::size_t cap = max_degree == 0 ? n : max_degree - 1;
    std::vector<Vertex> seq(n - 2, 0);
    std::vector<std::size_t> mult(n, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == seq.size()) {
            emit(tree_from_pruefer(n, seq));
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (mult[v] == cap) continue;
            ++mult[v];
            seq[pos] = v;
            fill(pos + 1);
            --mult[v];
        }
    };
    fill(0);
    return count;
}

inline std::vector<Graph> enumerate_trees(std::size_t n, std::size_t max_degree, bool dedupe) {
    std::vector<Graph> out;
    for_each_tree(n, max_degree, dedupe, [&](const Graph& t) { out.push_back(t); });
    return out;
}

}  // namespace expind
