#pragma once

#include <functional>
#include <vector>

namespace layerkit {

using RealFn = std::function<double(double)>;

/// Fixed-order Gauss-Legendre rules on [a,b].
double gauss3(const RealFn& f, double a, double b);
double gauss5(const RealFn& f, double a, double b);

/// Adaptive 5-point Gauss quadrature with interval bisection.
///
/// A panel is accepted when the two-half refinement changes it by less than
/// the locally distributed tolerance. Integrable kinks and jumps are handled
/// by subdivision down to `max_depth` levels.
/// Throws QuadratureFailure when the integrand evaluates to a non-finite value.
double integrate(const RealFn& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-300, int max_depth = 60);

/// Breakpoints and running integral of an adaptive pass over [a,b];
/// cum[k] approximates the integral over [x[0], x[k]].
struct CumulativeTable {
    std::vector<double> x;
    std::vector<double> cum;
    double total() const { return cum.back(); }

    /// Solves cum(x) = target for x by panel lookup plus local root finding.
    double invert(const RealFn& f, double target) const;
};

CumulativeTable cumulative_integral(const RealFn& f, double a, double b,
                                    double rel_tol = 1e-12, int max_depth = 60);

} // namespace layerkit
