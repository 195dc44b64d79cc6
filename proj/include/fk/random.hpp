#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fk/supertree.hpp"

namespace fk {

/// Random k-uniform supertree with m edges: each new edge hangs from a
/// uniformly chosen existing vertex, then vertex ids are shuffled.
template <class Rng>
Supertree random_supertree(int k, int m, Rng& rng) {
    if (k < 2 || m < 1) fail(ErrorCode::InvalidSpec, "random supertree needs k >= 2 and m >= 1");
    const int n = 1 + m * (k - 1);
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<Edge> edges;
    Edge first;
    for (int i = 0; i < k; ++i) first.push_back(perm[static_cast<std::size_t>(i)]);
    edges.push_back(first);
    int next = k;
    for (int e = 1; e < m; ++e) {
        std::uniform_int_distribution<int> pick(0, next - 1);
        Edge ed{perm[static_cast<std::size_t>(pick(rng))]};
        for (int c = 0; c < k - 1; ++c) ed.push_back(perm[static_cast<std::size_t>(next++)]);
        edges.push_back(std::move(ed));
    }
    return build_supertree(k, n, std::move(edges));
}

} // namespace fk
