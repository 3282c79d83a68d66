#pragma once

#include <functional>

#include "layerkit/mesh.hpp"
#include "layerkit/mesh_spec.hpp"
#include "layerkit/monitor.hpp"

namespace layerkit {

// ---------------------------------------------------------------------------
// Transition points
// ---------------------------------------------------------------------------

/// min{1/2, mu (eps/gamma) ln n}. n enters through its logarithm only and may
/// be any real >= 2.
double transition_sigma_shishkin(double eps, double gamma, double mu, double n);

/// min{1/2, mu (eps/gamma) ln(1/eps)}; requires eps in (0,1).
double transition_sigma_bakhvalov(double eps, double gamma, double mu);

/// 2 eps (2 + (k+1) ln n), clamped at 1/2 to keep a valid two-piece mesh.
double transition_delta_veldhuizen(double eps, int k, double n);

// ---------------------------------------------------------------------------
// Mesh generators
// ---------------------------------------------------------------------------

/// Two-piece equidistant mesh: n/2 cells on [0,sigma], n/2 on [sigma,1].
GeneratedMesh mesh_shishkin(const MeshSpec& spec);

/// S-type mesh: x_i = -(mu eps/gamma) ln psi(i/n) on the fine half, equidistant
/// beyond the transition. spec.psi empty selects the Bakhvalov-Shishkin
/// characterizing function 1 - 2t(1 - 1/(theta n)).
/// Falls back to the uniform mesh (with a flag) when sigma >= 1/2.
GeneratedMesh mesh_stype(const MeshSpec& spec);

/// max |psi'| on [0,1/2] by dense sampling and forward differences.
double psi_max_derivative(const std::function<double(double)>& psi, int samples);

/// Bakhvalov's construction: logarithmic grading up to the C1 matching point
/// tau, tangent-line continuation beyond. tau solves
/// phi'(tau)(1-tau) = 1 - phi(tau) by bracketed root finding.
/// When no tangency point exists (large eps) the uniform mesh is returned
/// with MeshFlag::UniformFallback.
GeneratedMesh mesh_bakhvalov_original(const MeshSpec& spec);

/// x_i = -(mu eps/gamma) ln(1 - 2(1-eps) i/n) on the fine half, equidistant on
/// [sigma*, 1]. Uniform fallback when the transition point clamps at 1/2.
GeneratedMesh mesh_bakhvalov_type(const MeshSpec& spec);

enum class GartlandVariant {
    Original,  // h <= min(H, eps H e^{gamma x/(2 eps)}, e h_prev)
    Type,      // drops the e h_prev term; node count independent of eps
};

GeneratedMesh mesh_gartland(double eps, double gamma, double H, GartlandVariant variant);

/// Inner uniform zone x_i = i kappa H eps, then geometric grading
/// x_{i+1} = x_i (1 + kappa H) until the interval is exhausted.
GeneratedMesh mesh_duran_lombardi(double eps, double H, double kappa);

/// Mesh from the implicit generating function
///   xi(t) - e^{-gamma xi/(mu eps)} + 1 - 2t = 0,
/// solved per node by safeguarded root finding and rescaled so x_n = 1.
GeneratedMesh mesh_lambert(const MeshSpec& spec);

/// Minimizer of sum_i (h_{i+1}/h_i - 1)^2 subject to h_1 = first_step,
/// h_n = last_step, sum h_i = 1. Throws Infeasible when no positive step
/// vector meets the constraints. stats reports the functional value and the
/// measured smoothness constant max|h_i - h_{i-1}| n^2.
GeneratedMesh mesh_sidorov(int n, double first_step, double last_step);

/// Sidorov-minimized fine part on [0, sigma*], uniform coarse part beyond;
/// n/2 cells each. stats reports the coarse-step constants.
GeneratedMesh mesh_emelyanov_composite(double eps, double gamma, int n);

/// Nodes with equal monitor mass per cell, by inversion of the adaptive
/// cumulative integral of the monitor.
Mesh1D equidistribute_analytic(const MonitorFn& monitor, int n);

/// Right: x -> 1-x with reversed order. Both: composes the halved fine
/// profiles of the mesh and its mirror on [0,1/2] and [1/2,1], keeping the
/// interval count (requires even n).
Mesh1D mirror_mesh(const Mesh1D& mesh, LayerSide side);

/// Dispatch on spec.family; applies mirror_mesh for spec.side != Left.
GeneratedMesh build_mesh(const MeshSpec& spec);

} // namespace layerkit
