#pragma once

#include <functional>
#include <string>
#include <vector>

#include "layerkit/mesh.hpp"
#include "layerkit/problem.hpp"
#include "layerkit/tridiagonal.hpp"

namespace layerkit {

enum class Scheme { Upwind, Central, FemP1 };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

struct DiscreteSolution {
    Mesh1D mesh;
    std::vector<double> values;  // u_i, i = 0..N
    Scheme scheme = Scheme::Upwind;
    bool conservative = false;   // upwind assembled in flux form

    /// D^- u_i = (u_i - u_{i-1}) / h_i, i = 1..N.
    double backward_difference(int i) const {
        return (values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(i - 1)]) /
               mesh.step(i);
    }
};

/// Simple upwind for convection-diffusion: nonuniform second difference for
/// -eps u'', forward difference for the -b u' term (the layer-side direction).
/// conservative = true assembles the flux form -(eps u' + b u)' + (c + b') u,
/// with b' taken as the discrete midpoint difference.
/// Throws SignError when sampled b drops below gamma.
Tridiagonal assemble_upwind(const SPProblem& problem, const Mesh1D& mesh,
                            bool conservative = false);

/// Central second-difference scheme for reaction-diffusion.
/// Throws SignError when sampled c drops below gamma^2.
Tridiagonal assemble_central(const SPProblem& problem, const Mesh1D& mesh);

/// P1 Galerkin with 3-point Gauss quadrature per cell, for either problem kind.
Tridiagonal assemble_fem_p1(const SPProblem& problem, const Mesh1D& mesh);

DiscreteSolution solve(const SPProblem& problem, const Mesh1D& mesh, Scheme scheme,
                       bool conservative = false);

/// max_i |u(x_i) - u_i|.
double error_max(const DiscreteSolution& solution, const std::function<double(double)>& exact);

/// ||u - u^N||_eps with u^N the P1 interpolant of the nodal values and
/// ||v||_eps^2 = eps |v|_1^2 + ||v||_0^2, integrated adaptively per cell.
double error_energy(const DiscreteSolution& solution, const SPProblem& problem);

} // namespace layerkit
