#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "fk/supertree.hpp"

namespace fk {

/// Isomorphism invariant of a supertree: equal codes iff isomorphic.
struct CanonicalCode {
    std::string code;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Vertex-edge incidence tree: nodes [0, n) are vertices, [n, n+m) are edges.
inline std::vector<std::vector<int>> incidence_tree(const Supertree& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + g.size()));
    for (EdgeIndex e = 0; e < g.size(); ++e)
        for (VertexId v : g.edge(e)) {
            adj[static_cast<std::size_t>(v)].push_back(n + e);
            adj[static_cast<std::size_t>(n + e)].push_back(v);
        }
    return adj;
}

// BFS order and parent array of a tree rooted at `root`.
inline void bfs_tree(const std::vector<std::vector<int>>& adj, int root, std::vector<int>& order, std::vector<int>& parent) {
    order.clear();
    parent.assign(adj.size(), -1);
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        for (int y : adj[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] == -1) {
                parent[static_cast<std::size_t>(y)] = x;
                order.push_back(y);
            }
    }
    parent[static_cast<std::size_t>(root)] = -1;
}

// AHU codes of every node of the incidence tree rooted at `root`.
inline std::vector<std::string> ahu_codes(const std::vector<std::vector<int>>& adj, int vertex_count, int root) {
    std::vector<int> order, parent;
    bfs_tree(adj, root, order, parent);
    std::vector<std::vector<std::string>> child_codes(adj.size());
    std::vector<std::string> codes(adj.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int x = *it;
        auto& kids = child_codes[static_cast<std::size_t>(x)];
        std::sort(kids.begin(), kids.end());
        std::string c(1, x < vertex_count ? 'v' : 'e');
        c += '(';
        for (auto& s : kids) c += s;
        c += ')';
        kids.clear();
        kids.shrink_to_fit();
        if (parent[static_cast<std::size_t>(x)] >= 0) child_codes[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])].push_back(c);
        codes[static_cast<std::size_t>(x)] = std::move(c);
    }
    return codes;
}

inline std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
    const int total = static_cast<int>(adj.size());
    std::vector<int> order, parent;
    bfs_tree(adj, 0, order, parent);
    std::vector<int> subtree(adj.size(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[static_cast<std::size_t>(*it)] >= 0) subtree[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += subtree[static_cast<std::size_t>(*it)];
    std::vector<int> centroids;
    for (int x = 0; x < total; ++x) {
        int heaviest = total - subtree[static_cast<std::size_t>(x)];
        for (int y : adj[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] == x) heaviest = std::max(heaviest, subtree[static_cast<std::size_t>(y)]);
        if (2 * heaviest <= total) centroids.push_back(x);
    }
    return centroids;
}

} // namespace detail

/// AHU code of the incidence tree rooted at its centroid. With two centroids
/// (necessarily one vertex node and one edge node) the smaller of the two
/// rooted codes is taken.
inline CanonicalCode canonical_code(const Supertree& g) {
    const auto adj = detail::incidence_tree(g);
    std::string best;
    for (int c : detail::tree_centroids(adj)) {
        std::string code = std::move(detail::ahu_codes(adj, g.order(), c)[static_cast<std::size_t>(c)]);
        if (best.empty() || code < best) best = std::move(code);
    }
    return CanonicalCode{"k" + std::to_string(g.k()) + ":" + best};
}

inline bool is_isomorphic(const Supertree& a, const Supertree& b) {
    if (a.k() != b.k() || a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// Codes of the subtrees hanging below each vertex and each edge when the
/// supertree is rooted at `root`. Two siblings with equal codes can be
/// exchanged by an automorphism fixing everything outside their subtrees.
struct RootedCodes {
    std::vector<std::string> vertex;
    std::vector<std::string> edge;
};

inline RootedCodes rooted_codes(const Supertree& g, VertexId root) {
    const auto adj = detail::incidence_tree(g);
    auto all = detail::ahu_codes(adj, g.order(), root);
    RootedCodes rc;
    rc.vertex.assign(all.begin(), all.begin() + g.order());
    rc.edge.assign(all.begin() + g.order(), all.end());
    return rc;
}

} // namespace fk

template <>
struct std::hash<fk::CanonicalCode> {
    std::size_t operator()(const fk::CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.code); }
};
