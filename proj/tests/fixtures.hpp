#pragma once

#include <vector>

#include "fk/fk.hpp"

namespace fixture {

inline fk::Supertree star(int k, int d) {
    std::vector<fk::Edge> edges;
    int next = 1;
    for (int i = 0; i < d; ++i) {
        fk::Edge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(next++);
        edges.push_back(e);
    }
    return fk::build_supertree(k, next, edges);
}

inline fk::Supertree single_edge(int k) {
    fk::Edge e;
    for (int i = 0; i < k; ++i) e.push_back(i);
    return fk::build_supertree(k, k, {e});
}

// {u,v,x},{u,a,b},{v,c,d} with u=0, v=1, x=2, a=3, b=4, c=5, d=6.
enum : int { U = 0, V = 1, X = 2, A = 3, B = 4, C = 5, D = 6 };
inline fk::Supertree two_interior() { return fk::build_supertree(3, 7, {{U, V, X}, {U, A, B}, {V, C, D}}); }

inline fk::Supertree path_k2() { return fk::build_supertree(2, 3, {{0, 1}, {1, 2}}); }

inline fk::DegreeSequence seq(int k, std::vector<int> d) { return fk::DegreeSequence::from_degrees(k, std::move(d)); }

// d followed by `ones` pendant entries.
inline std::vector<int> with_ones(std::vector<int> d, int ones) {
    d.insert(d.end(), static_cast<std::size_t>(ones), 1);
    return d;
}

} // namespace fixture
