#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "fk/config.hpp"
#include "fk/supertree.hpp"

namespace fk {

/// Exchange U1 (taken from e1) with V1 (taken from e2).
struct SwitchSpec {
    EdgeIndex e1 = 0;
    EdgeIndex e2 = 0;
    std::vector<VertexId> u1;
    std::vector<VertexId> v1;
};

/// Re-attach every edge of F from u to v.
struct ShiftSpec {
    VertexId u = 0;
    std::vector<EdgeIndex> edges;
    VertexId v = 0;
};

struct UnitTransform {
    int p = 0;

    friend bool operator==(const UnitTransform&, const UnitTransform&) = default;
};

struct Hypothesis {
    bool weak = false;
    bool strict = false;
};

namespace detail {

inline bool has_duplicates(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
}

inline void check_edge_index(const Supertree& g, EdgeIndex e) {
    if (e < 0 || e >= g.size()) fail(ErrorCode::InvalidSpec, "edge index " + std::to_string(e) + " out of range");
}

inline Supertree rebuild(const Supertree& g, std::vector<Edge> edges) {
    try {
        return build_supertree(g.k(), g.order(), std::move(edges));
    } catch (const Error& e) {
        fail(ErrorCode::ResultNotSupertree, e.what());
    }
}

inline void check_switch(const Supertree& g, const SwitchSpec& s) {
    check_edge_index(g, s.e1);
    check_edge_index(g, s.e2);
    if (s.e1 == s.e2) fail(ErrorCode::InvalidSpec, "switching needs two distinct edges");
    if (s.u1.size() != s.v1.size()) fail(ErrorCode::InvalidSpec, "U1 and V1 must have the same size");
    if (has_duplicates(s.u1) || has_duplicates(s.v1)) fail(ErrorCode::InvalidSpec, "U1 and V1 must not repeat vertices");
    for (VertexId x : s.u1) {
        if (x < 0 || x >= g.order() || !g.contains(s.e1, x)) fail(ErrorCode::InvalidSpec, "vertex " + std::to_string(x) + " is not in e1");
        if (std::find(s.v1.begin(), s.v1.end(), x) != s.v1.end()) fail(ErrorCode::InvalidSpec, "U1 and V1 must be disjoint");
    }
    for (VertexId x : s.v1)
        if (x < 0 || x >= g.order() || !g.contains(s.e2, x)) fail(ErrorCode::InvalidSpec, "vertex " + std::to_string(x) + " is not in e2");
}

inline Edge replace_subset(const Edge& e, std::span<const VertexId> out, std::span<const VertexId> in) {
    Edge r;
    for (VertexId x : e)
        if (std::find(out.begin(), out.end(), x) == out.end()) r.push_back(x);
    r.insert(r.end(), in.begin(), in.end());
    std::sort(r.begin(), r.end());
    return r;
}

inline double sum_over(std::span<const double> f, std::span<const VertexId> xs) {
    double s = 0.0;
    for (VertexId x : xs) s += f[static_cast<std::size_t>(x)];
    return s;
}

} // namespace detail

/// Replaces e1 by (e1 \ U1) + V1 and e2 by (e2 \ V1) + U1. Degrees are
/// unchanged; a result that is not a supertree is rejected.
inline Supertree apply_switch(const Supertree& g, const SwitchSpec& s) {
    detail::check_switch(g, s);
    Edge e1 = detail::replace_subset(g.edge(s.e1), s.u1, s.v1);
    Edge e2 = detail::replace_subset(g.edge(s.e2), s.v1, s.u1);
    if (std::adjacent_find(e1.begin(), e1.end()) != e1.end() || std::adjacent_find(e2.begin(), e2.end()) != e2.end())
        fail(ErrorCode::InvalidSpec, "switched edges would repeat a vertex");
    std::vector<Edge> edges;
    for (EdgeIndex e = 0; e < g.size(); ++e)
        if (e != s.e1 && e != s.e2) edges.push_back(g.edge(e));
    edges.push_back(std::move(e1));
    edges.push_back(std::move(e2));
    return detail::rebuild(g, std::move(edges));
}

/// Weak: sum_U1 f >= sum_V1 f and sum_{e1\U1} f <= sum_{e2\V1} f.
/// Strict: weak with at least one of the two inequalities strict.
inline Hypothesis check_switch_hypothesis(const Supertree& g, std::span<const double> f, const SwitchSpec& s,
                                          const Tolerances& tol = {}) {
    detail::check_switch(g, s);
    if (static_cast<int>(f.size()) != g.order()) fail(ErrorCode::InvalidSpec, "function size does not match the supertree");
    auto rest = [](const Edge& e, const std::vector<VertexId>& minus) {
        std::vector<VertexId> r;
        for (VertexId x : e)
            if (std::find(minus.begin(), minus.end(), x) == minus.end()) r.push_back(x);
        return r;
    };
    const double su = detail::sum_over(f, s.u1);
    const double sv = detail::sum_over(f, s.v1);
    const double r1 = detail::sum_over(f, rest(g.edge(s.e1), s.u1));
    const double r2 = detail::sum_over(f, rest(g.edge(s.e2), s.v1));
    Hypothesis h;
    h.weak = greater_or_close(su, sv, tol.compare_rel) && greater_or_close(r2, r1, tol.compare_rel);
    h.strict = h.weak && (definitely_greater(su, sv, tol.compare_rel) || definitely_greater(r2, r1, tol.compare_rel));
    return h;
}

namespace detail {

inline void check_shift(const Supertree& g, const ShiftSpec& s) {
    if (s.u < 0 || s.u >= g.order() || s.v < 0 || s.v >= g.order()) fail(ErrorCode::InvalidSpec, "shift vertex out of range");
    if (s.u == s.v) fail(ErrorCode::InvalidSpec, "shifting needs two distinct vertices");
    if (has_duplicates(s.edges)) fail(ErrorCode::InvalidSpec, "F repeats an edge");
    for (EdgeIndex e : s.edges) {
        check_edge_index(g, e);
        if (!g.contains(e, s.u)) fail(ErrorCode::InvalidSpec, "edge " + std::to_string(e) + " does not contain u");
        if (g.contains(e, s.v)) fail(ErrorCode::InvalidSpec, "edge " + std::to_string(e) + " already contains v");
    }
}

} // namespace detail

/// Replaces every e in F by (e \ {u}) + {v}. Moving all of u's edges would
/// isolate u and is rejected as ResultNotSupertree.
inline Supertree apply_shift(const Supertree& g, const ShiftSpec& s) {
    detail::check_shift(g, s);
    if (!s.edges.empty() && static_cast<int>(s.edges.size()) == g.degree(s.u))
        fail(ErrorCode::ResultNotSupertree, "vertex " + std::to_string(s.u) + " would be left without edges");
    std::vector<Edge> edges;
    for (EdgeIndex e = 0; e < g.size(); ++e) {
        if (std::find(s.edges.begin(), s.edges.end(), e) == s.edges.end()) {
            edges.push_back(g.edge(e));
            continue;
        }
        const VertexId out[] = {s.u};
        const VertexId in[] = {s.v};
        edges.push_back(detail::replace_subset(g.edge(e), out, in));
    }
    return detail::rebuild(g, std::move(edges));
}

/// Weak: f(u) >= f(v) >= f(w) for every w in V(F) \ {u}.
/// Strict: weak with any of these inequalities strict.
inline Hypothesis check_shift_hypothesis(const Supertree& g, std::span<const double> f, const ShiftSpec& s,
                                         const Tolerances& tol = {}) {
    detail::check_shift(g, s);
    if (static_cast<int>(f.size()) != g.order()) fail(ErrorCode::InvalidSpec, "function size does not match the supertree");
    const double rel = tol.compare_rel;
    const double fu = f[static_cast<std::size_t>(s.u)];
    const double fv = f[static_cast<std::size_t>(s.v)];
    Hypothesis h;
    h.weak = greater_or_close(fu, fv, rel);
    bool strict = definitely_greater(fu, fv, rel);
    for (EdgeIndex e : s.edges)
        for (VertexId w : g.edge(e)) {
            if (w == s.u) continue;
            const double fw = f[static_cast<std::size_t>(w)];
            h.weak = h.weak && greater_or_close(fv, fw, rel);
            strict = strict || definitely_greater(fv, fw, rel);
        }
    h.strict = h.weak && strict;
    return h;
}

/// Moves one unit from interior entry p to entry p+1 and re-sorts.
inline DegreeSequence unit_transformation(const DegreeSequence& pi, int p) {
    if (p < 0 || p > pi.n0 - 2)
        fail(ErrorCode::IndexOutOfRange, "p=" + std::to_string(p) + " outside [0, " + std::to_string(pi.n0 - 2) + "]");
    if (pi.entries[static_cast<std::size_t>(p)] < 3)
        fail(ErrorCode::DegreeTooSmall, "d_" + std::to_string(p) + "=" + std::to_string(pi.entries[static_cast<std::size_t>(p)]) + " is below 3");
    std::vector<int> d = pi.entries;
    d[static_cast<std::size_t>(p)] -= 1;
    d[static_cast<std::size_t>(p) + 1] += 1;
    return DegreeSequence::from_degrees(pi.k, std::move(d));
}

/// True iff pi is majorized by pi_prime: every prefix sum of pi (up to
/// index n-2) is at most the matching prefix sum of pi_prime, with equal
/// totals.
inline bool majorizes(const DegreeSequence& pi_prime, const DegreeSequence& pi) {
    if (pi_prime.n() != pi.n() || pi_prime.k != pi.k)
        fail(ErrorCode::LengthMismatch, "sequences differ in length or uniformity");
    if (pi_prime.total() != pi.total()) return false;
    long a = 0, b = 0;
    for (int j = 0; j + 1 < pi.n(); ++j) {
        a += pi.entries[static_cast<std::size_t>(j)];
        b += pi_prime.entries[static_cast<std::size_t>(j)];
        if (a > b) return false;
    }
    return true;
}

/// Unit transformations carrying pi to pi_prime (requires pi_prime majorized
/// by pi and equal interior counts). Each step acts on the first index where
/// the prefix sums differ.
inline std::vector<UnitTransform> unit_transform_chain(const DegreeSequence& pi, const DegreeSequence& pi_prime) {
    if (!majorizes(pi, pi_prime)) fail(ErrorCode::NotMajorized, "(" + pi_prime.to_string() + ") is not majorized by (" + pi.to_string() + ")");
    if (pi.n0 != pi_prime.n0) fail(ErrorCode::NotMajorized, "interior vertex counts differ");
    std::vector<UnitTransform> chain;
    DegreeSequence cur = pi;
    while (!(cur == pi_prime)) {
        int j = 0;
        while (cur.entries[static_cast<std::size_t>(j)] == pi_prime.entries[static_cast<std::size_t>(j)]) ++j;
        chain.push_back({j});
        cur = unit_transformation(cur, j);
    }
    return chain;
}

inline DegreeSequence replay_chain(DegreeSequence pi, std::span<const UnitTransform> chain) {
    for (const UnitTransform& u : chain) pi = unit_transformation(pi, u.p);
    return pi;
}

} // namespace fk
