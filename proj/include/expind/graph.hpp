#pragma once

// Undirected simple graphs, hop distances, BFS variants and edge-list I/O.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expind {

using Vertex = std::uint32_t;

/// Hop count that may be infinite. Infinite compares greater than every finite value.
class Distance {
public:
    constexpr Distance() = default;

    static constexpr Distance finite(std::uint32_t hops) { return Distance(hops); }
    static constexpr Distance infinite() { return Distance(kInf); }

    constexpr bool is_finite() const { return hops_ != kInf; }
    constexpr std::uint32_t hops() const {
        if (!is_finite()) throw std::logic_error("hops() of an infinite distance");
        return hops_;
    }

    constexpr auto operator<=>(const Distance&) const = default;

    friend std::ostream& operator<<(std::ostream& os, Distance d) {
        if (d.is_finite()) return os << d.hops_;
        return os << "inf";
    }

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    constexpr explicit Distance(std::uint32_t h) : hops_(h) {}
    std::uint32_t hops_ = kInf;
};

/// Strictly increasing list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static VertexSet from_mask(const std::vector<char>& mask) {
        VertexSet s;
        for (std::size_t v = 0; v < mask.size(); ++v)
            if (mask[v]) s.ids_.push_back(static_cast<Vertex>(v));
        return s;
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const { return ids_; }

    VertexSet with(Vertex v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
        if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
        return s;
    }
    VertexSet without(Vertex v) const {
        VertexSet s = *this;
        auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
        if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
        return s;
    }
    VertexSet united(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }
    bool includes(const VertexSet& other) const {
        return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
    }

    std::vector<char> mask(std::size_t n) const {
        std::vector<char> m(n, 0);
        for (Vertex v : ids_) m.at(v) = 1;
        return m;
    }

    auto operator<=>(const VertexSet&) const = default;
    bool operator==(const VertexSet&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
        os << '{';
        for (std::size_t i = 0; i < s.ids_.size(); ++i) os << (i ? "," : "") << s.ids_[i];
        return os << '}';
    }

private:
    std::vector<Vertex> ids_;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Malformed, OutOfRange, DuplicateEdge, Loop };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Immutable undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adj_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
            if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw GraphError("duplicate edge");
        }
        m_ = edges.size();
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    std::size_t degree(Vertex u) const { return adj_[u].size(); }

    bool adjacent(Vertex u, Vertex v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by the kept vertices, relabelled 0..k-1 in ascending
    /// order of original id. `original[i]` is the old id of new vertex i.
    struct Induced;
    Induced induced(const std::vector<char>& keep) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

struct Graph::Induced {
    Graph graph;
    std::vector<Vertex> original;
};

inline Graph::Induced Graph::induced(const std::vector<char>& keep) const {
    std::vector<Vertex> relabel(order(), std::numeric_limits<Vertex>::max());
    Induced out;
    for (Vertex v = 0; v < order(); ++v)
        if (keep[v]) {
            relabel[v] = static_cast<Vertex>(out.original.size());
            out.original.push_back(v);
        }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : this->edges())
        if (keep[u] && keep[v]) edges.emplace_back(relabel[u], relabel[v]);
    out.graph = Graph(out.original.size(), edges);
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list and DOT I/O

inline Graph parse_edge_list(std::istream& in) {
    using K = ParseError::Kind;
    std::string line;
    std::size_t lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (out.find_first_not_of(" \t") != std::string::npos) return true;
        }
        return false;
    };
    auto read_two = [&](const std::string& text, long long& a, long long& b) {
        std::istringstream ls(text);
        std::string extra;
        return static_cast<bool>(ls >> a >> b) && !(ls >> extra);
    };

    if (!next_content_line(line)) throw ParseError(K::Malformed, lineno + 1, "missing header \"n m\"");
    long long n = 0, m = 0;
    if (!read_two(line, n, m) || n < 0 || m < 0)
        throw ParseError(K::Malformed, lineno, "header must be two nonnegative integers \"n m\"");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(line))
            throw ParseError(K::Malformed, lineno + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        long long u = 0, v = 0;
        if (!read_two(line, u, v)) throw ParseError(K::Malformed, lineno, "malformed edge \"" + line + "\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(K::OutOfRange, lineno, "vertex id out of range in \"" + line + "\"");
        if (u == v) throw ParseError(K::Loop, lineno, "self-loop at vertex " + std::to_string(u));
        auto& su = seen[static_cast<std::size_t>(u)];
        if (std::find(su.begin(), su.end(), static_cast<Vertex>(v)) != su.end())
            throw ParseError(K::DuplicateEdge, lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        su.push_back(static_cast<Vertex>(v));
        seen[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_content_line(line)) throw ParseError(K::Malformed, lineno, "trailing content after edge list");
    return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

/// Graphviz export; highlighted vertices are drawn as filled double circles.
inline void to_dot(std::ostream& out, const Graph& g, const VertexSet& highlight = {}) {
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (highlight.contains(v)) out << " [shape=doublecircle, style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline std::string to_dot(const Graph& g, const VertexSet& highlight = {}) {
    std::ostringstream out;
    to_dot(out, g, highlight);
    return out.str();
}

// ---------------------------------------------------------------------------
// Traversal

inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    std::vector<Distance> dist(g.order(), Distance::infinite());
    std::vector<Vertex> queue{source};
    dist[source] = Distance::finite(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        auto next = Distance::finite(dist[u].hops() + 1);
        for (Vertex v : g.neighbors(u))
            if (!dist[v].is_finite()) {
                dist[v] = next;
                queue.push_back(v);
            }
    }
    return dist;
}

/// BFS from `source` where sink vertices may be entered but are never expanded.
/// The source itself is always expanded, even when it is a sink. For a sink v the
/// result is the distance from source to v in G - (sinks \ {source, v}).
inline std::vector<Distance> absorbing_bfs(const Graph& g, Vertex source, const std::vector<char>& sink_mask) {
    std::vector<Distance> dist(g.order(), Distance::infinite());
    std::vector<Vertex> queue{source};
    dist[source] = Distance::finite(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        if (u != source && sink_mask[u]) continue;
        auto next = Distance::finite(dist[u].hops() + 1);
        for (Vertex v : g.neighbors(u))
            if (!dist[v].is_finite()) {
                dist[v] = next;
                queue.push_back(v);
            }
    }
    return dist;
}

inline std::vector<Distance> absorbing_bfs(const Graph& g, Vertex source, const VertexSet& sinks) {
    return absorbing_bfs(g, source, sinks.mask(g.order()));
}

inline VertexSet d_neighborhood(const Graph& g, Vertex u, std::uint32_t d) {
    auto dist = bfs_distances(g, u);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (dist[v] == Distance::finite(d)) out.push_back(v);
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Structural queries

inline std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](Distance d) { return d.is_finite(); });
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

inline bool is_subcubic(const Graph& g) { return max_degree(g) <= 3; }

inline VertexSet vertices_of_degree(const Graph& g, std::size_t deg) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == deg) out.push_back(v);
    return VertexSet(std::move(out));
}

inline VertexSet endvertices(const Graph& g) { return vertices_of_degree(g, 1); }
inline VertexSet degree2_vertices(const Graph& g) { return vertices_of_degree(g, 2); }

inline bool is_path_graph(const Graph& g) {
    return is_tree(g) && max_degree(g) <= 2;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (Vertex v : g.neighbors(comp[h]))
                if (!seen[v]) {
                    seen[v] = 1;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace detail {

// Farthest vertex from `source` (smallest id among ties) and BFS parents.
inline std::pair<Vertex, std::vector<Vertex>> farthest(const Graph& g, Vertex source) {
    auto dist = bfs_distances(g, source);
    std::vector<Vertex> parent(g.order(), source);
    std::vector<Vertex> queue{source};
    std::vector<char> seen(g.order(), 0);
    seen[source] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex v : g.neighbors(queue[h]))
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = queue[h];
                queue.push_back(v);
            }
    Vertex best = source;
    for (Vertex v = 0; v < g.order(); ++v)
        if (dist[best] < dist[v]) best = v;
    return {best, std::move(parent)};
}

}  // namespace detail

/// Diametral path of a tree by double BFS; ties go to the smallest id and the
/// returned sequence starts at the end with the smaller id.
inline std::vector<Vertex> longest_path(const Graph& t) {
    if (!is_tree(t)) throw GraphError("longest_path requires a tree");
    auto [a, unused] = detail::farthest(t, 0);
    auto [b, parent] = detail::farthest(t, a);
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace expind
