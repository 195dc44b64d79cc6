#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "fk/config.hpp"
#include "fk/jacobi.hpp"
#include "fk/supertree.hpp"

namespace fk {

// Hypergraph Laplacian in its k-uniform form: L[i][i] = d(i) and
// L[i][j] = -1/(k-1) when i and j share an edge (in a supertree they share
// at most one).
using LaplacianMatrix = SquareMatrix<double>;

inline LaplacianMatrix assemble_laplacian(const Supertree& g) {
    const auto n = static_cast<std::size_t>(g.order());
    LaplacianMatrix l(n);
    const double w = 1.0 / (g.k() - 1);
    for (VertexId v = 0; v < g.order(); ++v) l(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = g.degree(v);
    for (const Edge& e : g.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                const auto a = static_cast<std::size_t>(e[i]);
                const auto b = static_cast<std::size_t>(e[j]);
                l(a, b) -= w;
                l(b, a) -= w;
            }
    return l;
}

/// Principal submatrix of the Laplacian on the interior vertices.
struct DirichletLaplacian {
    SquareMatrix<double> matrix;
    std::vector<VertexId> vertex_of;  // interior position -> vertex id

    std::size_t order() const noexcept { return vertex_of.size(); }
};

inline DirichletLaplacian dirichlet_laplacian(const Supertree& g) {
    DirichletLaplacian dl;
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.is_interior(v)) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(dl.vertex_of.size());
            dl.vertex_of.push_back(v);
        }
    if (dl.vertex_of.empty()) fail(ErrorCode::NoInteriorVertices, "the Dirichlet problem needs at least one interior vertex");

    dl.matrix = SquareMatrix<double>(dl.vertex_of.size());
    const double w = 1.0 / (g.k() - 1);
    for (std::size_t i = 0; i < dl.vertex_of.size(); ++i) dl.matrix(i, i) = g.degree(dl.vertex_of[i]);
    for (const Edge& e : g.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                const int a = pos[static_cast<std::size_t>(e[i])];
                const int b = pos[static_cast<std::size_t>(e[j])];
                if (a < 0 || b < 0) continue;
                dl.matrix(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) -= w;
                dl.matrix(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) -= w;
            }
    return dl;
}

struct DirichletEigenpair {
    double lambda = 0.0;
    std::vector<double> f;  // indexed by vertex id; zero on the boundary, unit norm
    double gap = std::numeric_limits<double>::infinity();  // lambda_2 - lambda_1
    double residual = 0.0;  // ||M f - lambda f|| on the interior
    int sweeps = 0;
    bool degenerate = false;  // gap below gap_rel * max(1, lambda)

    double min_interior_value(const Supertree& g) const {
        double m = std::numeric_limits<double>::infinity();
        for (VertexId v = 0; v < g.order(); ++v)
            if (g.is_interior(v)) m = std::min(m, f[static_cast<std::size_t>(v)]);
        return m;
    }
};

/// First Dirichlet eigenvalue and its positive unit eigenfunction.
inline DirichletEigenpair first_dirichlet_eigenpair(const Supertree& g, const Tolerances& tol = {}) {
    const DirichletLaplacian dl = dirichlet_laplacian(g);
    const auto eig = jacobi_eigen(dl.matrix, JacobiOptions{tol.jacobi_threshold, tol.jacobi_max_sweeps});
    const std::size_t n0 = dl.order();

    std::vector<double> x(n0);
    double norm = 0.0;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < n0; ++i) {
        x[i] = eig.vectors(i, 0);
        norm += x[i] * x[i];
        if (std::abs(x[i]) > std::abs(x[largest])) largest = i;
    }
    norm = std::sqrt(norm);
    const double sign = x[largest] < 0 ? -1.0 : 1.0;
    for (double& xi : x) xi *= sign / norm;

    DirichletEigenpair out;
    out.lambda = eig.values[0];
    out.sweeps = eig.sweeps;
    if (n0 > 1) out.gap = eig.values[1] - eig.values[0];
    out.degenerate = out.gap <= tol.gap_rel * std::max(1.0, out.lambda);

    const auto mx = dl.matrix.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < n0; ++i) r += (mx[i] - out.lambda * x[i]) * (mx[i] - out.lambda * x[i]);
    out.residual = std::sqrt(r);

    out.f.assign(static_cast<std::size_t>(g.order()), 0.0);
    for (std::size_t i = 0; i < n0; ++i) out.f[static_cast<std::size_t>(dl.vertex_of[i])] = x[i];
    return out;
}

/// <Lf, f> summed edge by edge, each unordered pair inside an edge once.
inline double quadratic_form(const Supertree& g, std::span<const double> f) {
    if (static_cast<int>(f.size()) != g.order())
        fail(ErrorCode::LengthMismatch, "function has " + std::to_string(f.size()) + " values for " + std::to_string(g.order()) + " vertices");
    const double w = 1.0 / (g.k() - 1);
    double num = 0.0;
    for (const Edge& e : g.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                const double d = f[static_cast<std::size_t>(e[i])] - f[static_cast<std::size_t>(e[j])];
                num += w * d * d;
            }
    return num;
}

inline double rayleigh_quotient(const Supertree& g, std::span<const double> f) {
    const double num = quadratic_form(g, f);
    double den = 0.0;
    for (double x : f) den += x * x;
    if (den == 0.0) fail(ErrorCode::ZeroFunction, "Rayleigh quotient of the zero function");
    return num / den;
}

} // namespace fk
