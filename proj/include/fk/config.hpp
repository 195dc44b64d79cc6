#pragma once

#include <algorithm>
#include <cmath>

namespace fk {

// Numerical tolerances used across the library. The defaults reproduce every
// verification run shipped with the project; nothing else reads global state.
struct Tolerances {
    // Jacobi stops once the off-diagonal Frobenius norm falls below
    // jacobi_threshold * ||M||_F.
    double jacobi_threshold = 1e-13;
    int jacobi_max_sweeps = 100;
    // Relative tolerance for comparing eigenfunction values and sums.
    double compare_rel = 1e-10;
    // Absolute tolerance for comparing eigenvalues of distinct supertrees.
    double lambda_tie_abs = 1e-10;
    // A spectral gap at or below gap_rel * max(1, lambda) flags the eigenpair.
    double gap_rel = 1e-9;
};

inline bool approx_equal(double x, double y, double rel) noexcept {
    return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

// x > y by more than the comparison tolerance.
inline bool definitely_greater(double x, double y, double rel) noexcept {
    return x > y && !approx_equal(x, y, rel);
}

// x >= y up to the comparison tolerance.
inline bool greater_or_close(double x, double y, double rel) noexcept {
    return x >= y || approx_equal(x, y, rel);
}

} // namespace fk
