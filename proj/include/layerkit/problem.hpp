#pragma once

#include <functional>

namespace layerkit {

enum class ProblemKind { ConvectionDiffusion, ReactionDiffusion };

/// Two-point boundary value problem on [0,1].
///
/// ConvectionDiffusion:  -eps u'' - b u' + c u = f,  b >= gamma > 0, c >= 0,
/// with the layer at x = 0 (matching E = exp(-gamma x/eps)).
/// ReactionDiffusion:    -eps^2 u'' + c u = f,  c >= gamma^2 > 0,
/// with layers at both endpoints.
struct SPProblem {
    ProblemKind kind = ProblemKind::ConvectionDiffusion;
    double eps = 1.0;
    double gamma = 1.0;

    std::function<double(double)> b;  // convection coefficient (CD only)
    std::function<double(double)> c;  // reaction coefficient
    std::function<double(double)> f;  // source term

    double u_left = 0.0;
    double u_right = 0.0;

    std::function<double(double)> exact;        // optional
    std::function<double(double)> exact_deriv;  // optional

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Problem with a known closed-form solution embedding the canonical layer.
///
/// ConvectionDiffusion (b = gamma, c = 1):
///   u(x) = (e^{-gamma x/eps} - e^{-gamma/eps}) / (1 - e^{-gamma/eps}) + x(1-x)
/// ReactionDiffusion (c = gamma^2):
///   u(x) = e^{-gamma x/eps} + e^{-gamma(1-x)/eps} + cos(pi x)
/// The source f is the closed form obtained by differentiating u; the
/// exponential terms cancel in the operator, leaving a smooth f.
SPProblem manufactured_problem(ProblemKind kind, double eps, double gamma);

} // namespace layerkit
