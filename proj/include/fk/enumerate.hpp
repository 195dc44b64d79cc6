#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fk/canonical.hpp"
#include "fk/config.hpp"
#include "fk/slo.hpp"
#include "fk/spectral.hpp"
#include "fk/supertree.hpp"
#include "fk/transforms.hpp"

namespace fk {

struct ByDegreeSequence {
    DegreeSequence pi;
};
struct ByCounts {
    int n = 0, n0 = 0, k = 2;
};
struct ByCountsMinDegree {
    int n = 0, n0 = 0, k = 2, d = 2;
};
using FamilySpec = std::variant<ByDegreeSequence, ByCounts, ByCountsMinDegree>;

inline std::string to_string(const FamilySpec& spec) {
    struct Visit {
        std::string operator()(const ByDegreeSequence& s) const { return "pi=(" + s.pi.to_string() + "),k=" + std::to_string(s.pi.k); }
        std::string operator()(const ByCounts& s) const {
            return "n=" + std::to_string(s.n) + ",n0=" + std::to_string(s.n0) + ",k=" + std::to_string(s.k);
        }
        std::string operator()(const ByCountsMinDegree& s) const {
            return "n=" + std::to_string(s.n) + ",n0=" + std::to_string(s.n0) + ",k=" + std::to_string(s.k) + ",d=" + std::to_string(s.d);
        }
    };
    return std::visit(Visit{}, spec);
}

struct EnumerationOptions {
    Tolerances tol{};
    int jobs = 1;
};

namespace detail {

// Runs fn(i) for i in [0, count) on up to `jobs` threads, strided.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Pendant-free partial degrees must stay dominated by the target: sorting both
// in descending order, every partial entry is at most the matching target one.
inline bool can_extend_to(const Supertree& partial, const std::vector<int>& target_desc) {
    if (partial.order() > static_cast<int>(target_desc.size())) return false;
    std::vector<int> d(static_cast<std::size_t>(partial.order()));
    for (VertexId v = 0; v < partial.order(); ++v) d[static_cast<std::size_t>(v)] = partial.degree(v);
    std::sort(d.rbegin(), d.rend());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > target_desc[i]) return false;
    return true;
}

using Keep = std::function<bool(const Supertree&)>;

// Grows supertrees one edge at a time: each new edge meets the current tree in
// exactly one existing vertex and brings k-1 fresh ones. Every supertree with m
// edges arises this way (remove a pendant edge to go back), so keeping one
// representative per canonical code at each depth is exhaustive.
inline std::vector<Supertree> grow_supertrees(int k, int m, const Keep& keep, int jobs) {
    std::vector<Supertree> frontier;
    {
        Edge first(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i;
        Supertree seed = build_supertree(k, k, {first});
        if (keep(seed)) frontier.push_back(std::move(seed));
    }
    for (int depth = 1; depth < m; ++depth) {
        const auto workers = static_cast<std::size_t>(std::max(1, jobs));
        std::vector<std::unordered_map<std::string, Supertree>> local(workers);
        parallel_for(workers, jobs, [&](std::size_t w) {
            for (std::size_t i = w; i < frontier.size(); i += workers) {
                const Supertree& g = frontier[i];
                const int n = g.order();
                for (VertexId x = 0; x < n; ++x) {
                    std::vector<Edge> edges = g.edges();
                    Edge e{x};
                    for (int c = 0; c < k - 1; ++c) e.push_back(n + c);
                    edges.push_back(std::move(e));
                    Supertree child = build_supertree(k, n + k - 1, std::move(edges));
                    if (!keep(child)) continue;
                    std::string code = canonical_code(child).code;
                    local[w].try_emplace(std::move(code), std::move(child));
                }
            }
        });
        std::unordered_map<std::string, Supertree> merged;
        for (auto& part : local)
            for (auto& [code, tree] : part) merged.try_emplace(code, std::move(tree));
        std::vector<std::pair<std::string, Supertree>> sorted(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        frontier.clear();
        for (auto& [code, tree] : sorted) frontier.push_back(std::move(tree));
    }
    return frontier;
}

inline DegreeSequence extremal_sequence(int n, int n0, int k, int d) {
    const int m = (n - 1) / (k - 1);
    const int interior_sum = k * m - (n - n0);
    std::vector<int> degrees(static_cast<std::size_t>(n0), d);
    degrees.back() = interior_sum - (n0 - 1) * d;
    degrees.insert(degrees.end(), static_cast<std::size_t>(n - n0), 1);
    return DegreeSequence::from_degrees(k, std::move(degrees));
}

} // namespace detail

/// All feasible sequences with n vertices, n0 interior vertices and interior
/// degrees at least max(2, d_min), in lexicographic order.
inline std::vector<DegreeSequence> feasible_degree_sequences(int n, int n0, int k, int d_min) {
    std::vector<DegreeSequence> out;
    if (k < 2 || n < 1 || n0 < 0 || n0 > n || (n - 1) % (k - 1) != 0) return out;
    const int m = (n - 1) / (k - 1);
    if (m < 1) return out;
    if (n0 == 0) {
        if (m == 1) out.push_back(DegreeSequence::from_degrees(k, std::vector<int>(static_cast<std::size_t>(n), 1)));
        return out;
    }
    const int interior_sum = k * m - (n - n0);
    const int lo = std::max(2, d_min);
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int min_next, int remaining) {
        const int slots = n0 - static_cast<int>(cur.size());
        if (slots == 0) {
            if (remaining == 0) {
                std::vector<int> degrees = cur;
                degrees.insert(degrees.end(), static_cast<std::size_t>(n - n0), 1);
                out.push_back(DegreeSequence::from_degrees(k, std::move(degrees)));
            }
            return;
        }
        for (int d = min_next; d * slots <= remaining; ++d) {
            cur.push_back(d);
            rec(d, remaining - d);
            cur.pop_back();
        }
    };
    rec(lo, interior_sum);
    for (const DegreeSequence& pi : out) construct_slo_supertree(pi);  // realizability check
    return out;
}

/// One representative per isomorphism class of k-uniform supertrees on n vertices.
inline std::vector<Supertree> enumerate_all(int k, int n, int jobs = 1) {
    if (k < 2 || n < k || (n - 1) % (k - 1) != 0) return {};
    return detail::grow_supertrees(k, (n - 1) / (k - 1), [](const Supertree&) { return true; }, jobs);
}

/// One representative per isomorphism class of T_pi.
inline std::vector<Supertree> enumerate_supertrees(const DegreeSequence& pi, int jobs = 1) {
    if (!pi.feasible()) return {};
    std::vector<int> target = pi.entries;
    std::sort(target.rbegin(), target.rend());
    auto grown = detail::grow_supertrees(pi.k, pi.edge_count(), [&](const Supertree& g) { return detail::can_extend_to(g, target); }, jobs);
    std::vector<Supertree> out;
    for (auto& g : grown)
        if (degree_sequence(g) == pi) out.push_back(std::move(g));
    return out;
}

struct FamilyMember {
    Supertree tree;
    CanonicalCode code;
    DirichletEigenpair eigen;
    bool is_slo = false;  // isomorphic to the SLO-supertree of its own degree sequence
};

struct FkCertificate {
    FamilySpec family;
    std::vector<FamilyMember> members;
    std::size_t winner = 0;
    bool unique = false;
    bool slo_match = false;
    DegreeSequence extremal;  // degree sequence whose SLO-supertree is expected to win

    const FamilyMember& winning() const { return members.at(winner); }
    double winner_lambda() const { return winning().eigen.lambda; }
    bool passed() const { return unique && slo_match; }
};

namespace detail {

inline FkCertificate certify(FamilySpec family, std::vector<Supertree> trees, DegreeSequence extremal, const EnumerationOptions& opt) {
    FkCertificate cert{std::move(family), {}, 0, false, false, std::move(extremal)};
    const Supertree reference = construct_slo_supertree(cert.extremal).tree;
    const CanonicalCode reference_code = canonical_code(reference);

    std::vector<std::optional<FamilyMember>> slots(trees.size());
    parallel_for(trees.size(), opt.jobs, [&](std::size_t i) {
        const Supertree& g = trees[i];
        CanonicalCode code = canonical_code(g);
        const bool slo = code == canonical_code(construct_slo_supertree(degree_sequence(g)).tree);
        slots[i] = FamilyMember{g, std::move(code), first_dirichlet_eigenpair(g, opt.tol), slo};
    });
    for (auto& s : slots) cert.members.push_back(std::move(*s));

    for (std::size_t i = 1; i < cert.members.size(); ++i)
        if (cert.members[i].eigen.lambda < cert.members[cert.winner].eigen.lambda) cert.winner = i;
    const double best = cert.winner_lambda();
    cert.unique = true;
    for (std::size_t i = 0; i < cert.members.size(); ++i)
        if (i != cert.winner && !(cert.members[i].eigen.lambda - best > opt.tol.lambda_tie_abs)) cert.unique = false;
    cert.slo_match = cert.winning().code == reference_code;
    return cert;
}

} // namespace detail

/// Minimizes the first Dirichlet eigenvalue over T_pi and checks that the
/// minimizer is unique and is the SLO-supertree of pi.
inline FkCertificate verify_fk_theorem1(const DegreeSequence& pi, const EnumerationOptions& opt = {}) {
    if (!pi.feasible()) fail(ErrorCode::InfeasibleDegreeSequence, "(" + pi.to_string() + ") with k=" + std::to_string(pi.k));
    if (pi.n0 < 1) fail(ErrorCode::NoInteriorVertices, "(" + pi.to_string() + ") has no interior vertex");
    return detail::certify(ByDegreeSequence{pi}, enumerate_supertrees(pi, opt.jobs), pi, opt);
}

/// Minimizes over every supertree with n vertices, n0 interior vertices and
/// interior degrees at least d; the expected winner is the SLO-supertree of
/// (d, ..., d, d', 1, ..., 1).
inline FkCertificate verify_fk_theorem2(int n, int n0, int k, int d, const EnumerationOptions& opt = {}) {
    const auto sequences = feasible_degree_sequences(n, n0, k, d);
    if (sequences.empty() || n0 < 1)
        fail(ErrorCode::EmptyFamily, "no supertree with n=" + std::to_string(n) + ", n0=" + std::to_string(n0) + ", k=" +
                                         std::to_string(k) + ", interior degrees >= " + std::to_string(d));
    std::vector<Supertree> trees;
    for (const auto& pi : sequences)
        for (auto& g : enumerate_supertrees(pi, opt.jobs)) trees.push_back(std::move(g));
    return detail::certify(ByCountsMinDegree{n, n0, k, d}, std::move(trees), detail::extremal_sequence(n, n0, k, std::max(2, d)), opt);
}

/// For pi_prime majorized by pi (same n and n0, pi != pi_prime): checks that
/// the SLO-supertree of pi_prime has strictly smaller first eigenvalue.
inline bool verify_majorization_monotonicity(const DegreeSequence& pi, const DegreeSequence& pi_prime, const Tolerances& tol = {}) {
    for (const DegreeSequence* s : {&pi, &pi_prime})
        if (!s->feasible()) fail(ErrorCode::InfeasibleDegreeSequence, "(" + s->to_string() + ") with k=" + std::to_string(s->k));
    if (pi == pi_prime) fail(ErrorCode::NotMajorized, "the two sequences are equal");
    if (pi.n0 != pi_prime.n0 || !majorizes(pi, pi_prime))
        fail(ErrorCode::NotMajorized, "(" + pi_prime.to_string() + ") is not majorized by (" + pi.to_string() + ")");
    const double big = first_dirichlet_eigenpair(construct_slo_supertree(pi).tree, tol).lambda;
    const double small = first_dirichlet_eigenpair(construct_slo_supertree(pi_prime).tree, tol).lambda;
    return big - small > tol.lambda_tie_abs;
}

} // namespace fk
