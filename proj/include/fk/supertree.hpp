#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fk/error.hpp"

namespace fk {

using VertexId = int;   // dense, 0-based
using EdgeIndex = int;  // index into the sorted edge list
using Edge = std::vector<VertexId>;

class Supertree;
Supertree build_supertree(int k, int n, std::vector<Edge> edges);

/// A validated k-uniform supertree: connected, acyclic, every edge a k-set,
/// any two edges meeting in at most one vertex. Immutable once built; edges
/// are stored as sorted tuples in lexicographic order.
class Supertree {
public:
    int k() const noexcept { return k_; }
    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }

    std::span<const EdgeIndex> incident_edges(VertexId v) const {
        return incidence_.at(static_cast<std::size_t>(v));
    }
    int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }
    bool is_interior(VertexId v) const { return degree(v) >= 2; }
    bool is_boundary(VertexId v) const { return degree(v) == 1; }

    bool contains(EdgeIndex e, VertexId v) const {
        const Edge& ed = edge(e);
        return std::binary_search(ed.begin(), ed.end(), v);
    }

    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (EdgeIndex e : incident_edges(v))
            for (VertexId w : edges_[static_cast<std::size_t>(e)])
                if (w != v) out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    }

    int interior_count() const {
        int c = 0;
        for (VertexId v = 0; v < n_; ++v) c += is_interior(v) ? 1 : 0;
        return c;
    }

    friend bool operator==(const Supertree& a, const Supertree& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Supertree(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {
        incidence_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (VertexId v : edges_[e]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeIndex>(e));
    }

    friend Supertree build_supertree(int k, int n, std::vector<Edge> edges);

    int k_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

inline std::string edge_text(const Edge& e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << '}';
    return os.str();
}

} // namespace detail

/// Validates and builds a supertree. Edges may list their vertices in any
/// order; the result stores them sorted.
inline Supertree build_supertree(int k, int n, std::vector<Edge> edges) {
    if (k < 2) fail(ErrorCode::NotKUniform, "uniformity must be at least 2, got " + std::to_string(k));
    if (n < 1) fail(ErrorCode::Disconnected, "a supertree needs at least one vertex");
    if (edges.empty()) fail(ErrorCode::Disconnected, "a supertree needs at least one edge");

    for (Edge& e : edges) {
        if (static_cast<int>(e.size()) != k)
            fail(ErrorCode::NotKUniform, "edge " + detail::edge_text(e) + " has " + std::to_string(e.size()) +
                                             " vertices, expected " + std::to_string(k));
        for (VertexId v : e)
            if (v < 0 || v >= n) fail(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            fail(ErrorCode::NotKUniform, "edge " + detail::edge_text(e) + " repeats a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        fail(ErrorCode::DuplicateEdge, "edge " + detail::edge_text(*dup) + " appears twice");

    // Two edges sharing two vertices is reported before the cycle check so that
    // the overlap error is not masked by the (also true) cycle.
    {
        std::vector<std::pair<std::pair<VertexId, VertexId>, std::size_t>> pairs;
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (std::size_t i = 0; i < edges[e].size(); ++i)
                for (std::size_t j = i + 1; j < edges[e].size(); ++j) pairs.push_back({{edges[e][i], edges[e][j]}, e});
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i].first == pairs[i - 1].first)
                fail(ErrorCode::EdgeOverlapTooLarge, "edges " + detail::edge_text(edges[pairs[i - 1].second]) + " and " +
                                                         detail::edge_text(edges[pairs[i].second]) + " share two vertices");
    }

    detail::DisjointSets sets(n);
    for (const Edge& e : edges) {
        std::vector<int> roots;
        for (VertexId v : e) roots.push_back(sets.find(v));
        std::sort(roots.begin(), roots.end());
        if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
            fail(ErrorCode::ContainsCycle, "edge " + detail::edge_text(e) + " closes a cycle");
        for (VertexId v : e) sets.unite(v, e.front());
    }
    const int root = sets.find(0);
    for (VertexId v = 1; v < n; ++v)
        if (sets.find(v) != root) fail(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is not connected to vertex 0");

    return Supertree(k, n, std::move(edges));
}

struct BoundaryPartition {
    std::vector<VertexId> interior;        // degree >= 2
    std::vector<VertexId> boundary;        // degree == 1
    std::vector<EdgeIndex> interior_edges; // no boundary vertex
    std::vector<EdgeIndex> boundary_edges; // at least one boundary vertex
};

inline BoundaryPartition boundary_partition(const Supertree& g) {
    BoundaryPartition p;
    for (VertexId v = 0; v < g.order(); ++v) (g.is_interior(v) ? p.interior : p.boundary).push_back(v);
    for (EdgeIndex e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        bool touches = std::any_of(ed.begin(), ed.end(), [&](VertexId v) { return g.is_boundary(v); });
        (touches ? p.boundary_edges : p.interior_edges).push_back(e);
    }
    return p;
}

/// Degree sequence in the normal form used throughout: interior entries
/// (>= 2) in non-decreasing order, followed by the pendant entries (== 1).
/// May hold an infeasible sequence; see feasible().
struct DegreeSequence {
    int k = 2;
    std::vector<int> entries;
    int n0 = 0;

    /// Normalizes an arbitrary list of degrees. Entries below 1 are rejected.
    static DegreeSequence from_degrees(int k, std::vector<int> degrees) {
        for (int d : degrees)
            if (d < 1) fail(ErrorCode::InfeasibleDegreeSequence, "degree " + std::to_string(d) + " is below 1");
        std::vector<int> interior;
        std::size_t ones = 0;
        for (int d : degrees) {
            if (d == 1) ++ones;
            else interior.push_back(d);
        }
        std::sort(interior.begin(), interior.end());
        DegreeSequence s;
        s.k = k;
        s.n0 = static_cast<int>(interior.size());
        s.entries = std::move(interior);
        s.entries.insert(s.entries.end(), ones, 1);
        return s;
    }

    int n() const noexcept { return static_cast<int>(entries.size()); }
    std::span<const int> interior() const { return std::span<const int>(entries).first(static_cast<std::size_t>(n0)); }
    long total() const { return std::accumulate(entries.begin(), entries.end(), 0L); }

    /// Arithmetic realizability: (n-1) divisible by (k-1), degree sum k*m,
    /// and at least one interior vertex whenever there are two or more edges.
    bool feasible() const {
        if (k < 2 || entries.empty()) return false;
        const int n_ = n();
        if ((n_ - 1) % (k - 1) != 0) return false;
        const int m = (n_ - 1) / (k - 1);
        if (m < 1) return false;
        if (total() != static_cast<long>(k) * m) return false;
        if (m >= 2 && n0 < 1) return false;
        return true;
    }

    int edge_count() const { return (n() - 1) / (k - 1); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? "," : "") + std::to_string(entries[i]);
        return out;
    }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

inline DegreeSequence degree_sequence(const Supertree& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (VertexId v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return DegreeSequence::from_degrees(g.k(), std::move(d));
}

/// Rooted BFS view of a supertree. Every edge spans two consecutive levels:
/// one vertex at level i (its parent end) and k-1 at level i+1.
struct LevelStructure {
    VertexId root = 0;
    std::vector<std::vector<VertexId>> levels;
    std::vector<int> sizes;        // a_i
    std::vector<int> degree_sums;  // b_i
    std::vector<int> height_of;    // per vertex
    std::vector<VertexId> parent;  // -1 for the root
    std::vector<EdgeIndex> parent_edge;

    int height() const { return static_cast<int>(levels.size()) - 1; }
};

inline LevelStructure level_structure(const Supertree& g, VertexId root) {
    if (root < 0 || root >= g.order()) fail(ErrorCode::BadVertexId, "root " + std::to_string(root));
    const auto n = static_cast<std::size_t>(g.order());
    LevelStructure ls;
    ls.root = root;
    ls.height_of.assign(n, -1);
    ls.parent.assign(n, -1);
    ls.parent_edge.assign(n, -1);
    std::vector<char> edge_seen(static_cast<std::size_t>(g.size()), 0);
    std::queue<VertexId> q;
    ls.height_of[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        for (EdgeIndex e : g.incident_edges(v)) {
            if (edge_seen[static_cast<std::size_t>(e)]) continue;
            edge_seen[static_cast<std::size_t>(e)] = 1;
            for (VertexId w : g.edge(e)) {
                if (w == v) continue;
                ls.height_of[static_cast<std::size_t>(w)] = ls.height_of[static_cast<std::size_t>(v)] + 1;
                ls.parent[static_cast<std::size_t>(w)] = v;
                ls.parent_edge[static_cast<std::size_t>(w)] = e;
                q.push(w);
            }
        }
    }
    const int h = *std::max_element(ls.height_of.begin(), ls.height_of.end());
    ls.levels.assign(static_cast<std::size_t>(h) + 1, {});
    for (VertexId v = 0; v < g.order(); ++v) ls.levels[static_cast<std::size_t>(ls.height_of[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& lvl : ls.levels) {
        ls.sizes.push_back(static_cast<int>(lvl.size()));
        int b = 0;
        for (VertexId v : lvl) b += g.degree(v);
        ls.degree_sums.push_back(b);
    }
    return ls;
}

inline int distance(const Supertree& g, VertexId u, VertexId v) {
    for (VertexId x : {u, v})
        if (x < 0 || x >= g.order()) fail(ErrorCode::BadVertexId, "vertex " + std::to_string(x));
    if (u == v) return 0;
    return level_structure(g, u).height_of[static_cast<std::size_t>(v)];
}

} // namespace fk
