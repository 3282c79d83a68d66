#pragma once

#include <vector>

namespace layerkit {

/// Tridiagonal system A u = rhs. sub[0] and super[n-1] are unused (kept 0).
struct Tridiagonal {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
    static Tridiagonal zeros(std::size_t n);
};

/// Thomas elimination. Throws PivotBreakdown on a zero or non-finite pivot.
std::vector<double> thomas_solve(const Tridiagonal& sys);

/// Max-norm residual ||A u - rhs||_inf, for verification.
double tridiagonal_residual(const Tridiagonal& sys, const std::vector<double>& u);

} // namespace layerkit
