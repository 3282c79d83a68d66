#pragma once

#include <span>
#include <string>
#include <vector>

#include "layerkit/mesh_spec.hpp"
#include "layerkit/problem.hpp"
#include "layerkit/solver.hpp"

namespace layerkit {

/// e_N ~ C N^{-alpha} (PlainPower) or e_N ~ C N^{-1} ln N (LogFactor).
/// FamilyDefault picks LogFactor for Shishkin and PlainPower otherwise.
enum class RateModel { PlainPower, LogFactor, FamilyDefault };
enum class ErrorNorm { MaxNorm, Energy };

std::string rate_model_name(RateModel model);
std::string norm_name(ErrorNorm norm);

struct StudyConfig {
    ProblemKind kind = ProblemKind::ConvectionDiffusion;
    double gamma = 1.0;
    std::vector<double> eps_values{1e-2, 1e-4, 1e-6, 1e-8};
    std::vector<int> n_values{64, 128, 256, 512, 1024};
    std::vector<MeshSpec> families;  // templates; eps and n are filled per cell
    std::vector<Scheme> schemes{Scheme::Upwind};
    bool conservative_upwind = false;
    std::vector<ErrorNorm> norms{ErrorNorm::MaxNorm};
    RateModel rate_model = RateModel::FamilyDefault;
    std::string out_csv;
    std::string out_json;
};

struct ReportRow {
    std::string family;
    std::string scheme;
    double eps = 0.0;
    int n = 0;
    double error = 0.0;
    double constant = 0.0;  // implied constant under the rate model
    double rate = 0.0;      // NaN for the smallest N of a series
    std::string status = "ok";
};

struct UniformConstant {
    std::string family;
    std::string scheme;
    int n = 0;
    double value = 0.0;  // max over eps of the implied constant
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;  // sorted by (family, scheme, eps, n)
    std::vector<UniformConstant> uniform_constants;
};

/// Runs the (family, scheme, eps, N) grid for one norm. Per-cell failures are
/// recorded in the row status; the sweep never aborts. Grid cells may execute
/// in parallel (LAYERKIT_THREADS caps the worker count); rows are emitted in
/// deterministic order regardless.
ConvergenceReport convergence_study(const StudyConfig& config, ErrorNorm norm);
ConvergenceReport convergence_study(const StudyConfig& config);

/// Consecutive-pair log2 ratios for errors at doubling N. The LogFactor model
/// divides each error by ln N first. A zero error yields NaN for the rates
/// touching it.
std::vector<double> rate_estimate(std::span<const double> errors,
                                  std::span<const double> n_values, RateModel model);

struct DLRobustnessRow {
    double eps;
    double eps_star;
    double error;
    int intervals;
    bool is_min;  // smallest error among the eps* candidates for this eps
};

/// Solves on Duran-Lombardi meshes built with eps* in {eps/4, eps/2, eps, 2eps}
/// for each true eps.
std::vector<DLRobustnessRow> dl_robustness_study(const SPProblem& problem, double H,
                                                 double kappa,
                                                 std::span<const double> eps_values);

} // namespace layerkit
