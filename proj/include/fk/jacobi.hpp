#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <vector>

#include "fk/error.hpp"

namespace fk {

/// Dense row-major square matrix.
template <std::floating_point Real>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, Real fill = Real(0)) : n_(n), data_(n * n, fill) {}

    std::size_t order() const noexcept { return n_; }
    Real& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    Real operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
        return m;
    }

    Real frobenius_norm() const {
        Real s = 0;
        for (Real x : data_) s += x * x;
        return std::sqrt(s);
    }

    Real off_diagonal_norm() const {
        Real s = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j) s += (*this)(i, j) * (*this)(i, j);
        return std::sqrt(s);
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<Real> multiply(const std::vector<Real>& x) const {
        std::vector<Real> y(n_, Real(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Real> data_;
};

template <std::floating_point Real>
struct SymmetricEigen {
    std::vector<Real> values;     // ascending
    SquareMatrix<Real> vectors;   // column j pairs with values[j]
    int sweeps = 0;
};

struct JacobiOptions {
    double threshold = 1e-13;  // relative to ||M||_F
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigen-decomposition of a dense symmetric matrix.
///
/// Sweeps rotate every (p, q) pair in row order until the off-diagonal
/// Frobenius norm drops below threshold * ||M||_F. Eigenvalues are returned in
/// ascending order with their unit eigenvectors; throws ConvergenceFailure when
/// max_sweeps is exhausted first.
template <std::floating_point Real>
SymmetricEigen<Real> jacobi_eigen(SquareMatrix<Real> a, const JacobiOptions& opt = {}) {
    const std::size_t n = a.order();
    SquareMatrix<Real> v = SquareMatrix<Real>::identity(n);
    const Real scale = a.frobenius_norm();
    const Real target = static_cast<Real>(opt.threshold) * scale;

    int sweep = 0;
    while (a.off_diagonal_norm() > target) {
        if (sweep >= opt.max_sweeps)
            fail(ErrorCode::ConvergenceFailure, "Jacobi exceeded " + std::to_string(opt.max_sweeps) + " sweeps");
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Real apq = a(p, q);
                if (apq == Real(0)) continue;
                const Real theta = (a(q, q) - a(p, p)) / (Real(2) * apq);
                const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
                const Real c = Real(1) / std::sqrt(t * t + Real(1));
                const Real s = t * c;

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = Real(0);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Real arp = a(r, p);
                    const Real arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Real vrp = v(r, p);
                    const Real vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen<Real> out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = SquareMatrix<Real>(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(idx[j], idx[j]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, idx[j]);
    }
    return out;
}

} // namespace fk
