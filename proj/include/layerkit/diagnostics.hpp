#pragma once

#include "layerkit/mesh.hpp"

namespace layerkit {

/// Boundary layer function E(x) = exp(-gamma x / eps).
struct LayerFn {
    double gamma = 1.0;
    double eps = 1.0;
    double mu = 1.0;  // scaling exponent carried along for scaled variants

    double operator()(double x) const;
    double deriv(double x) const;
};

enum class InterpNorm { ScaledH1Semi, ScaledL2, MaxNorm };

/// Smallest K with h_i <= K h_j for adjacent steps. 1 for the uniform mesh.
double quasi_equidistance_constant(const Mesh1D& mesh);

/// N^2 * sum_i (h_i/eps)^3 exp(-2 x_{i-1}/eps): the constant implied by the
/// Liu-Xu admissibility condition. Terms are computed in log space so large
/// h_i/eps ratios cannot overflow.
double liuxu_admissibility(const Mesh1D& mesh, double eps);

struct Con2Result {
    bool ok;        // every layer-region step satisfies the bound
    double margin;  // worst ratio h_i / bound_i over the layer region (0 if empty)
};

/// Sufficient condition h_i <= min(S eps/N e^{x_{i-1}/(2 eps)}, 1/N), checked
/// for the steps left of the crossover point x = 2 eps ln(1/(S eps)) where the
/// exponential arm is the binding one.
Con2Result liuxu_con2_check(const Mesh1D& mesh, double eps, double s);

/// Scaled interpolation error of the layer part against its P1 interpolant:
/// ScaledH1Semi -> eps^{1/2} |E - E^I|_1 (exact E' in the integrand),
/// ScaledL2     -> eps^{-1/2} ||E - E^I||_0,
/// MaxNorm      -> max |E - E^I| by dense per-cell sampling.
double interpolation_error_layer(const Mesh1D& mesh, const LayerFn& layer, InterpNorm norm);

struct RegionCounts {
    int inner;       // nodes in [0, x*]
    int transition;  // nodes in (x*, x')
    int outer;       // nodes in [x', 1]
};

/// Node counts for Gartland's regions, with K = 2/gamma:
/// x* = K eps ln(K/H), x' = K eps ln(K/eps).
RegionCounts transition_region_counts(const Mesh1D& mesh, double eps, double gamma, double H);

/// Aggregate per-mesh measurements; the admissibility values use the given
/// eps and con2 factor s.
struct MeshReport {
    double quasi_constant;
    double min_step;
    double max_step;
    int node_count;
    double admissibility_value;
    double con2_margin;  // max over all steps of h_i / min(s eps/N e^{x/(2eps)}, 1/N)
};

MeshReport make_mesh_report(const Mesh1D& mesh, double eps, double s = 4.0);

} // namespace layerkit
