#pragma once

#include <vector>

#include "layerkit/mesh.hpp"
#include "layerkit/problem.hpp"
#include "layerkit/solver.hpp"

namespace layerkit {

/// eta = max_i h_i sqrt(1 + (D^- u_i)^2). The calibration constant is left to
/// the caller; the harness records true error / eta as the effectivity.
double kopteva_estimator(const DiscreteSolution& solution);

struct EquidistributeResult {
    Mesh1D mesh;     // equidistributes the solution's arc-length monitor exactly
    double quality;  // Q = N max_i h_i M_i / sum_j h_j M_j of the *input* mesh
};

/// One step of the Kopteva-Stynes iteration: builds the piecewise-constant
/// monitor M_i = sqrt(1 + (D^- u_i)^2) and inverts its cumulative sum.
/// c0 > 1 is validated here; the stopping comparison happens in ks_adapt.
EquidistributeResult equidistribute_step(const DiscreteSolution& solution, double c0);

struct AdaptIterate {
    Mesh1D mesh;
    DiscreteSolution solution;
    std::vector<double> monitor;  // M_i on cells, entry k is cell k+1
    double quality;
    double estimator;
    double error;  // exact max-norm error when available, else NaN
};

enum class StopReason { Equidistributed, MaxIter };

struct AdaptTrace {
    std::vector<AdaptIterate> iterations;
    int final_index = 0;
    StopReason stop_reason = StopReason::Equidistributed;
};

/// Solve -> monitor -> equidistribute, starting from the uniform mesh with n
/// cells, until the quality ratio drops to c0 or max_iter solves have run.
/// Uses the conservative upwind scheme throughout (the estimator's setting).
AdaptTrace ks_adapt(const SPProblem& problem, int n, double c0 = 2.0, int max_iter = 20);

} // namespace layerkit
