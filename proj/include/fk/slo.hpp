#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fk/canonical.hpp"
#include "fk/config.hpp"
#include "fk/supertree.hpp"

namespace fk {

/// Total order on the vertices; position 0 is the root.
struct VertexOrdering {
    std::vector<VertexId> order;

    std::vector<int> positions() const {
        std::vector<int> pos(order.size(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        return pos;
    }

    friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
};

enum class SloRule { S1, S2, S3, S4, S5 };

inline std::string to_string(SloRule r) { return "S" + std::to_string(static_cast<int>(r) + 1); }

/// One broken rule with the vertices that break it.
///   S1, S3, S5: {u, v} with u before v.
///   S2: {u, v, x, y}: u before v, x child of u, y child of v, y before x.
///   S4: {a, w, b}: a and b consecutive non-minimal members of `edge`, w outside it between them.
struct SloViolation {
    SloRule rule;
    std::vector<VertexId> witness;
    EdgeIndex edge = -1;

    std::string describe() const {
        std::string s = to_string(rule) + ":";
        for (VertexId v : witness) s += " " + std::to_string(v);
        if (edge >= 0) s += " (edge " + std::to_string(edge) + ")";
        return s;
    }
};

namespace detail {

inline std::vector<int> checked_positions(const Supertree& g, const VertexOrdering& ord) {
    if (static_cast<int>(ord.order.size()) != g.order())
        fail(ErrorCode::NotAPermutation, "ordering has " + std::to_string(ord.order.size()) + " entries for " +
                                             std::to_string(g.order()) + " vertices");
    std::vector<int> pos(ord.order.size(), -1);
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        const VertexId v = ord.order[i];
        if (v < 0 || v >= g.order() || pos[static_cast<std::size_t>(v)] != -1)
            fail(ErrorCode::NotAPermutation, "vertex " + std::to_string(v) + " is out of range or repeated");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return pos;
}

} // namespace detail

/// Checks the five SLO rules, with S4 in its consecutive-children form.
/// Returns every violation found; an empty list means `ord` is an SLO-ordering.
inline std::vector<SloViolation> check_slo(const Supertree& g, const VertexOrdering& ord) {
    const auto pos = detail::checked_positions(g, ord);
    const auto ls = level_structure(g, ord.order.front());
    const auto& h = ls.height_of;
    const auto& par = ls.parent;
    const auto& seq = ord.order;
    const std::size_t n = seq.size();
    auto at = [](const auto& vec, VertexId v) { return vec[static_cast<std::size_t>(v)]; };

    std::vector<SloViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const VertexId u = seq[i], v = seq[j];
            if (at(h, u) > at(h, v)) out.push_back({SloRule::S1, {u, v}});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const VertexId y = seq[i], x = seq[j];  // y before x
            if (at(par, x) < 0 || at(par, y) < 0) continue;
            const VertexId u = at(par, x), v = at(par, y);
            if (u != v && at(pos, u) < at(pos, v)) out.push_back({SloRule::S2, {u, v, x, y}});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const VertexId u = seq[i], v = seq[j];
            if (g.is_boundary(u) && g.is_interior(v)) out.push_back({SloRule::S3, {u, v}});
        }
    for (EdgeIndex e = 0; e < g.size(); ++e) {
        Edge members = g.edge(e);
        std::sort(members.begin(), members.end(), [&](VertexId a, VertexId b) { return at(pos, a) < at(pos, b); });
        for (std::size_t i = 1; i + 1 < members.size(); ++i)
            for (int p = at(pos, members[i]) + 1; p < at(pos, members[i + 1]); ++p)
                out.push_back({SloRule::S4, {members[i], seq[static_cast<std::size_t>(p)], members[i + 1]}, e});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const VertexId u = seq[i], v = seq[j];
            if (g.is_interior(u) && g.is_interior(v) && g.degree(u) > g.degree(v)) out.push_back({SloRule::S5, {u, v}});
        }
    return out;
}

namespace detail {

// Backtracking over breadth-first layouts from a fixed root. A layout is fixed
// by the order of each vertex's child edges and the order of the children
// inside each edge; S1, S2 and S4 hold for every layout, so only the
// degree-monotone key (interior degree, boundary last) needs checking.
// Siblings with equal rooted codes are interchangeable and tried once.
class SloSearch {
public:
    SloSearch(const Supertree& g, VertexId root)
        : g_(g), ls_(level_structure(g, root)), codes_(rooted_codes(g, root)),
          child_edges_(static_cast<std::size_t>(g.order())) {
        for (VertexId v = 0; v < g.order(); ++v)
            for (EdgeIndex e : g.incident_edges(v))
                if (e != ls_.parent_edge[static_cast<std::size_t>(v)]) child_edges_[static_cast<std::size_t>(v)].push_back(e);
        order_.push_back(root);
    }

    std::optional<VertexOrdering> run() {
        if (place(0)) return VertexOrdering{order_};
        return std::nullopt;
    }

private:
    int key(VertexId v) const { return g_.is_interior(v) ? g_.degree(v) : INT_MAX; }

    bool place(std::size_t t) {
        if (t == order_.size()) return static_cast<int>(order_.size()) == g_.order();
        std::vector<EdgeIndex> edges = child_edges_[static_cast<std::size_t>(order_[t])];
        return arrange_edges(t, edges);
    }

    bool arrange_edges(std::size_t t, std::vector<EdgeIndex>& remaining) {
        if (remaining.empty()) return place(t + 1);
        const VertexId parent = order_[t];
        std::vector<std::string> tried;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            const EdgeIndex e = remaining[i];
            const std::string& code = codes_.edge[static_cast<std::size_t>(e)];
            if (std::find(tried.begin(), tried.end(), code) != tried.end()) continue;
            tried.push_back(code);
            std::vector<EdgeIndex> rest = remaining;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<VertexId> children;
            for (VertexId w : g_.edge(e))
                if (w != parent) children.push_back(w);
            if (arrange_children(t, rest, children)) return true;
        }
        return false;
    }

    bool arrange_children(std::size_t t, std::vector<EdgeIndex>& edges, std::vector<VertexId>& children) {
        if (children.empty()) return arrange_edges(t, edges);
        std::vector<std::string> tried;
        for (std::size_t i = 0; i < children.size(); ++i) {
            const VertexId c = children[i];
            if (key(c) < key(order_.back())) continue;
            const std::string& code = codes_.vertex[static_cast<std::size_t>(c)];
            if (std::find(tried.begin(), tried.end(), code) != tried.end()) continue;
            tried.push_back(code);
            std::vector<VertexId> rest = children;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            order_.push_back(c);
            if (arrange_children(t, edges, rest)) return true;
            order_.pop_back();
        }
        return false;
    }

    const Supertree& g_;
    LevelStructure ls_;
    RootedCodes codes_;
    std::vector<std::vector<EdgeIndex>> child_edges_;
    std::vector<VertexId> order_;
};

} // namespace detail

/// Searches for an SLO-ordering. S5 forces the root to carry the minimum
/// interior degree, so only those roots are tried (one per rooted-code class).
inline std::optional<VertexOrdering> find_slo_ordering(const Supertree& g) {
    std::vector<VertexId> roots;
    int min_degree = INT_MAX;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.is_interior(v)) min_degree = std::min(min_degree, g.degree(v));
    for (VertexId v = 0; v < g.order(); ++v)
        if (min_degree == INT_MAX || (g.is_interior(v) && g.degree(v) == min_degree)) roots.push_back(v);

    std::vector<std::string> tried;
    for (VertexId root : roots) {
        std::string code = rooted_codes(g, root).vertex[static_cast<std::size_t>(root)];
        if (std::find(tried.begin(), tried.end(), code) != tried.end()) continue;
        tried.push_back(std::move(code));
        if (auto ord = detail::SloSearch(g, root).run()) {
            if (!check_slo(g, *ord).empty()) throw std::logic_error("slo search produced an ordering that fails check_slo");
            return ord;
        }
    }
    return std::nullopt;
}

struct SloSupertree {
    Supertree tree;
    VertexOrdering ordering;  // creation order, which is the identity on ids
};

/// Breadth-first greedy construction: the t-th created vertex receives the
/// t-th degree of `pi` and spawns its child edges, each adding k-1 new
/// vertices in sequence.
inline SloSupertree construct_slo_supertree(const DegreeSequence& pi) {
    if (!pi.feasible()) fail(ErrorCode::InfeasibleDegreeSequence, "(" + pi.to_string() + ") with k=" + std::to_string(pi.k));
    const int n = pi.n();
    const int k = pi.k;
    std::vector<Edge> edges;
    if (pi.n0 == 0) {
        Edge e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i;
        edges.push_back(std::move(e));
    } else {
        int next = 1;
        for (int t = 0; t < n && t < next; ++t) {
            const int spawn = pi.entries[static_cast<std::size_t>(t)] - (t == 0 ? 0 : 1);
            for (int s = 0; s < spawn; ++s) {
                if (next + k - 1 > n) fail(ErrorCode::InfeasibleDegreeSequence, "ran out of vertices building (" + pi.to_string() + ")");
                Edge e{t};
                for (int c = 0; c < k - 1; ++c) e.push_back(next++);
                edges.push_back(std::move(e));
            }
        }
        if (next != n) fail(ErrorCode::InfeasibleDegreeSequence, "ran out of degrees building (" + pi.to_string() + ")");
    }
    Supertree tree = build_supertree(k, n, std::move(edges));
    if (!(degree_sequence(tree) == pi)) fail(ErrorCode::InfeasibleDegreeSequence, "construction does not realize (" + pi.to_string() + ")");
    VertexOrdering ord;
    for (VertexId v = 0; v < n; ++v) ord.order.push_back(v);
    return {std::move(tree), std::move(ord)};
}

/// Label v_{s,i,p}: level s, group i, position p. Groups and positions are
/// 1-based; the root is (0, 1, 1).
struct RelabeledVertex {
    int s = 0;
    int i = 1;
    int p = 1;

    friend auto operator<=>(const RelabeledVertex&, const RelabeledVertex&) = default;
};

namespace detail {

// Stable insertion sort under a caller-supplied "comes first" predicate. The
// relabeling comparisons are tolerance-based and need not be a strict weak
// order, so std::sort is not an option.
template <typename T, typename Before>
void insertion_sort(std::vector<T>& xs, Before before) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
        T x = std::move(xs[i]);
        std::size_t j = i;
        while (j > 0 && before(x, xs[j - 1])) {
            xs[j] = std::move(xs[j - 1]);
            --j;
        }
        xs[j] = std::move(x);
    }
}

} // namespace detail

/// Relabels the vertices from the first Dirichlet eigenfunction `f`:
/// root at the maximum of f; at each level the child groups (one per edge
/// hanging from the previous level) by descending f-sum, ties by the parent's
/// label, then by smallest vertex id; inside a group by descending f, ties by
/// smallest id. Values within compare_rel of each other count as equal.
inline std::vector<RelabeledVertex> relabel(const Supertree& g, std::span<const double> f, const Tolerances& tol = {}) {
    if (static_cast<int>(f.size()) != g.order())
        fail(ErrorCode::NotAnEigenfunction, "function has " + std::to_string(f.size()) + " values for " + std::to_string(g.order()) + " vertices");
    const double rel = tol.compare_rel;
    auto val = [&](VertexId v) { return f[static_cast<std::size_t>(v)]; };
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.is_interior(v) && !(val(v) > 0.0))
            fail(ErrorCode::NotAnEigenfunction, "f is not positive on interior vertex " + std::to_string(v));
        if (g.is_boundary(v) && std::abs(val(v)) > 1e-12)
            fail(ErrorCode::NotAnEigenfunction, "f does not vanish on boundary vertex " + std::to_string(v));
    }

    VertexId root = 0;
    for (VertexId v = 1; v < g.order(); ++v)
        if (definitely_greater(val(v), val(root), rel)) root = v;

    const auto ls = level_structure(g, root);
    std::vector<RelabeledVertex> label(static_cast<std::size_t>(g.order()));
    label[static_cast<std::size_t>(root)] = {0, 1, 1};

    struct Group {
        VertexId parent;
        std::vector<VertexId> members;
        double sum = 0.0;
        VertexId min_id = 0;
    };
    auto member_before = [&](VertexId a, VertexId b) {
        if (approx_equal(val(a), val(b), rel)) return a < b;
        return val(a) > val(b);
    };
    auto group_before = [&](const Group& a, const Group& b) {
        if (!approx_equal(a.sum, b.sum, rel)) return a.sum > b.sum;
        const auto& la = label[static_cast<std::size_t>(a.parent)];
        const auto& lb = label[static_cast<std::size_t>(b.parent)];
        if (la != lb) return la < lb;
        return a.min_id < b.min_id;
    };

    for (std::size_t s = 1; s < ls.levels.size(); ++s) {
        std::vector<Group> groups;
        for (VertexId u : ls.levels[s - 1])
            for (EdgeIndex e : g.incident_edges(u)) {
                if (e == ls.parent_edge[static_cast<std::size_t>(u)]) continue;
                Group gr{u, {}, 0.0, INT_MAX};
                for (VertexId w : g.edge(e))
                    if (w != u) {
                        gr.members.push_back(w);
                        gr.sum += val(w);
                        gr.min_id = std::min(gr.min_id, w);
                    }
                detail::insertion_sort(gr.members, member_before);
                groups.push_back(std::move(gr));
            }
        detail::insertion_sort(groups, group_before);
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t p = 0; p < groups[i].members.size(); ++p)
                label[static_cast<std::size_t>(groups[i].members[p])] = {static_cast<int>(s), static_cast<int>(i) + 1, static_cast<int>(p) + 1};
    }
    return label;
}

inline VertexOrdering ordering_from_labels(const std::vector<RelabeledVertex>& labels) {
    VertexOrdering ord;
    for (VertexId v = 0; v < static_cast<VertexId>(labels.size()); ++v) ord.order.push_back(v);
    std::sort(ord.order.begin(), ord.order.end(), [&](VertexId a, VertexId b) {
        return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });
    return ord;
}

} // namespace fk
