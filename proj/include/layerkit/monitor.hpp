#pragma once

#include <functional>

namespace layerkit {

/// Positive weight function whose equal distribution over cells defines a mesh.
/// Well-posed equidistribution needs M bounded below by some m0 > 0.
struct MonitorFn {
    std::function<double(double)> evaluate;
    double operator()(double s) const { return evaluate(s); }
};

/// M(s) = max(1, k_tilde * gamma/eps * exp(-gamma s / (mu eps))).
/// Equidistributing it reproduces a Bakhvalov-style grading.
MonitorFn bakhvalov_monitor(double k_tilde, double eps, double gamma, double mu);

} // namespace layerkit
