#include "layerkit/meshes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "layerkit/errors.hpp"
#include "layerkit/quadrature.hpp"
#include "layerkit/rootfind.hpp"

namespace layerkit {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

void require_even_n(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("split mesh families need an even n >= 4");
    }
}

GeneratedMesh uniform_fallback(int n, double transition) {
    GeneratedMesh out{Mesh1D::uniform(n), MeshFlag::UniformFallback};
    out.transition = transition;
    return out;
}

/// Fine nodes given by x_i = fine(i), i = 0..n/2 with fine(n/2) == sigma,
/// then an equidistant coarse part on [sigma, 1].
Mesh1D split_mesh(int n, double sigma, const std::function<double(int)>& fine) {
    const int half = n / 2;
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    nodes[0] = 0.0;
    for (int i = 1; i < half; ++i) nodes[static_cast<std::size_t>(i)] = fine(i);
    nodes[static_cast<std::size_t>(half)] = sigma;
    for (int i = half + 1; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = sigma + (1.0 - sigma) * (i - half) / half;
    }
    nodes[static_cast<std::size_t>(n)] = 1.0;
    return Mesh1D::from_nodes(std::move(nodes));
}

} // namespace

std::string family_name(MeshFamily family) {
    switch (family) {
        case MeshFamily::Uniform: return "uniform";
        case MeshFamily::Shishkin: return "shishkin";
        case MeshFamily::SType: return "stype";
        case MeshFamily::BakhvalovOriginal: return "bakhvalov";
        case MeshFamily::BakhvalovType: return "bakhvalov_type";
        case MeshFamily::Gartland: return "gartland";
        case MeshFamily::GartlandType: return "gartland_type";
        case MeshFamily::DuranLombardi: return "duran_lombardi";
        case MeshFamily::Lambert: return "lambert";
        case MeshFamily::Sidorov: return "sidorov";
        case MeshFamily::EmelyanovComposite: return "emelyanov";
        case MeshFamily::Equidistributed: return "equidistributed";
    }
    throw std::logic_error("family_name: unknown family");
}

MeshFamily family_from_name(const std::string& name) {
    static const std::map<std::string, MeshFamily> lookup{
        {"uniform", MeshFamily::Uniform},
        {"shishkin", MeshFamily::Shishkin},
        {"stype", MeshFamily::SType},
        {"bakhvalov_shishkin", MeshFamily::SType},
        {"bakhvalov", MeshFamily::BakhvalovOriginal},
        {"bakhvalov_type", MeshFamily::BakhvalovType},
        {"gartland", MeshFamily::Gartland},
        {"gartland_type", MeshFamily::GartlandType},
        {"duran_lombardi", MeshFamily::DuranLombardi},
        {"lambert", MeshFamily::Lambert},
        {"sidorov", MeshFamily::Sidorov},
        {"emelyanov", MeshFamily::EmelyanovComposite},
        {"equidistributed", MeshFamily::Equidistributed},
    };
    const auto it = lookup.find(name);
    if (it == lookup.end()) {
        throw std::invalid_argument("unknown mesh family: " + name);
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Transition points
// ---------------------------------------------------------------------------

double transition_sigma_shishkin(double eps, double gamma, double mu, double n) {
    require(eps > 0.0 && gamma > 0.0 && mu > 0.0, "transition_sigma_shishkin: inputs must be positive");
    require(n >= 2.0, "transition_sigma_shishkin: n must be >= 2");
    return std::min(0.5, mu * (eps / gamma) * std::log(n));
}

double transition_sigma_bakhvalov(double eps, double gamma, double mu) {
    require(eps > 0.0 && eps < 1.0, "transition_sigma_bakhvalov: eps must lie in (0,1)");
    require(gamma > 0.0 && mu > 0.0, "transition_sigma_bakhvalov: gamma, mu must be positive");
    return std::min(0.5, mu * (eps / gamma) * std::log(1.0 / eps));
}

double transition_delta_veldhuizen(double eps, int k, double n) {
    require(eps > 0.0, "transition_delta_veldhuizen: eps must be positive");
    require(k >= 1, "transition_delta_veldhuizen: k must be >= 1");
    require(n >= 2.0, "transition_delta_veldhuizen: n must be >= 2");
    return std::min(0.5, 2.0 * eps * (2.0 + (k + 1) * std::log(n)));
}

// ---------------------------------------------------------------------------
// Shishkin and S-type
// ---------------------------------------------------------------------------

GeneratedMesh mesh_shishkin(const MeshSpec& spec) {
    require_even_n(spec.n);
    const double sigma = transition_sigma_shishkin(spec.eps, spec.gamma, spec.mu, spec.n);
    const int half = spec.n / 2;
    GeneratedMesh out{split_mesh(spec.n, sigma, [&](int i) { return sigma * i / half; })};
    out.transition = sigma;
    return out;
}

GeneratedMesh mesh_stype(const MeshSpec& spec) {
    require_even_n(spec.n);
    require(spec.theta > 0.0, "mesh_stype: theta must be positive");
    const double scale = spec.mu * spec.eps / spec.gamma;
    const double sigma = scale * std::log(spec.theta * spec.n);
    if (!(sigma < 0.5)) {
        return uniform_fallback(spec.n, 0.5);
    }
    std::function<double(double)> psi = spec.psi;
    if (!psi) {
        // Bakhvalov-Shishkin characterizing function.
        const double slope = 2.0 * (1.0 - 1.0 / (spec.theta * spec.n));
        psi = [slope](double t) { return 1.0 - slope * t; };
    }
    GeneratedMesh out{split_mesh(spec.n, sigma,
                                 [&](int i) { return -scale * std::log(psi(static_cast<double>(i) / spec.n)); })};
    out.transition = sigma;
    return out;
}

double psi_max_derivative(const std::function<double(double)>& psi, int samples) {
    if (samples < 1000) {
        throw std::invalid_argument("psi_max_derivative: need at least 1000 samples");
    }
    const double dt = 0.5 / samples;
    double best = 0.0;
    double prev = psi(0.0);
    for (int j = 1; j <= samples; ++j) {
        const double cur = psi(j * dt);
        best = std::max(best, std::fabs(cur - prev) / dt);
        prev = cur;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Bakhvalov family
// ---------------------------------------------------------------------------

GeneratedMesh mesh_bakhvalov_original(const MeshSpec& spec) {
    require(spec.q > 0.0 && spec.q < 1.0, "mesh_bakhvalov_original: q must lie in (0,1)");
    require(spec.eps > 0.0 && spec.gamma > 0.0 && spec.mu > 0.0,
            "mesh_bakhvalov_original: eps, gamma, mu must be positive");
    const int n = spec.n;
    if (n < 2) throw std::invalid_argument("mesh_bakhvalov_original: n must be >= 2");

    const double a = spec.mu * spec.eps / spec.gamma;
    const double q = spec.q;
    auto phi = [&](double t) { return -a * std::log((q - t) / q); };
    auto dphi = [&](double t) { return a / (q - t); };
    // C1 matching: the tangent at tau must pass through (1,1).
    auto residual = [&](double t) { return dphi(t) * (1.0 - t) - (1.0 - phi(t)); };

    if (residual(0.0) >= 0.0) {
        // Even the tangent at 0 overshoots: no tangency point for this eps.
        return uniform_fallback(n, std::numeric_limits<double>::quiet_NaN());
    }
    double hi = q * (1.0 - 1e-12);
    while (residual(hi) < 0.0) hi = q - 0.5 * (q - hi);
    const double tau = find_root(residual, 0.0, hi);

    const double phi_tau = phi(tau);
    const double dphi_tau = dphi(tau);
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    nodes[0] = 0.0;
    for (int i = 1; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        nodes[static_cast<std::size_t>(i)] =
            (t <= tau) ? phi(t) : phi_tau + dphi_tau * (t - tau);
    }
    nodes[static_cast<std::size_t>(n)] = 1.0;

    GeneratedMesh out{Mesh1D::from_nodes(std::move(nodes))};
    out.tau = tau;
    out.transition = phi_tau;
    return out;
}

GeneratedMesh mesh_bakhvalov_type(const MeshSpec& spec) {
    require_even_n(spec.n);
    const double sigma = transition_sigma_bakhvalov(spec.eps, spec.gamma, spec.mu);
    if (!(sigma < 0.5)) {
        return uniform_fallback(spec.n, 0.5);
    }
    const double scale = spec.mu * spec.eps / spec.gamma;
    GeneratedMesh out{split_mesh(
        spec.n, sigma,
        [&](int i) { return -scale * std::log(1.0 - 2.0 * (1.0 - spec.eps) * i / spec.n); })};
    out.transition = sigma;
    return out;
}

// ---------------------------------------------------------------------------
// Recursive families
// ---------------------------------------------------------------------------

namespace {

/// min(H, eps H e^{gamma x/(2 eps)}) with the exponential computed only when
/// it cannot exceed the cap.
double gartland_step(double eps, double gamma, double H, double x) {
    const double t = gamma * x / (2.0 * eps);
    if (t >= std::log(1.0 / eps)) return H;
    return eps * H * std::exp(t);
}

/// Append nodes from a step recursion until 1 is reached; the final partial
/// step is appended when it is at least half the would-be step and otherwise
/// merged into its neighbor.
void close_recursive_mesh(std::vector<double>& nodes, double next_step) {
    const double rem = 1.0 - nodes.back();
    if (rem < 0.5 * next_step && nodes.size() > 2) {
        nodes.back() = 1.0;
    } else {
        nodes.push_back(1.0);
    }
}

} // namespace

GeneratedMesh mesh_gartland(double eps, double gamma, double H, GartlandVariant variant) {
    require(eps > 0.0 && gamma > 0.0, "mesh_gartland: eps, gamma must be positive");
    require(H > 0.0 && H < 1.0, "mesh_gartland: H must lie in (0,1)");
    require(eps * H < 1.0, "mesh_gartland: eps*H must be < 1");

    std::vector<double> nodes{0.0, eps * H};
    double h = eps * H;
    while (true) {
        const double x = nodes.back();
        double hn = gartland_step(eps, gamma, H, x);
        if (variant == GartlandVariant::Original) hn = std::min(hn, std::exp(1.0) * h);
        if (x + hn >= 1.0) {
            close_recursive_mesh(nodes, hn);
            break;
        }
        nodes.push_back(x + hn);
        h = hn;
    }
    return GeneratedMesh{Mesh1D::from_nodes(std::move(nodes))};
}

GeneratedMesh mesh_duran_lombardi(double eps, double H, double kappa) {
    require(eps > 0.0 && eps < 1.0, "mesh_duran_lombardi: eps must lie in (0,1)");
    require(kappa > 0.0 && H > 0.0, "mesh_duran_lombardi: kappa, H must be positive");
    require(kappa * H < 1.0, "mesh_duran_lombardi: kappa*H must be < 1");

    const double kh = kappa * H;
    std::vector<double> nodes{0.0};
    const int inner = static_cast<int>(std::floor(1.0 / kh)) + 1;
    for (int i = 1; i <= inner; ++i) {
        const double x = i * kh * eps;
        if (x >= 1.0) break;  // eps close to 1: the uniform zone already spans [0,1]
        nodes.push_back(x);
    }
    while (true) {
        const double x = nodes.back();
        const double step = kh * x;
        if (x + step >= 1.0) {
            close_recursive_mesh(nodes, step);
            break;
        }
        nodes.push_back(x + step);
    }
    GeneratedMesh out{Mesh1D::from_nodes(std::move(nodes))};
    out.transition = inner * kh * eps;
    return out;
}

GeneratedMesh mesh_lambert(const MeshSpec& spec) {
    require(spec.eps > 0.0 && spec.gamma > 0.0 && spec.mu > 0.0,
            "mesh_lambert: eps, gamma, mu must be positive");
    const int n = spec.n;
    if (n < 2) throw std::invalid_argument("mesh_lambert: n must be >= 2");
    const double c = spec.gamma / (spec.mu * spec.eps);

    std::vector<double> xi(static_cast<std::size_t>(n) + 1);
    xi[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        auto impl = [&](double z) { return z - std::exp(-c * z) + 1.0 - 2.0 * t; };
        if (std::signbit(impl(0.0)) == std::signbit(impl(2.0))) {
            throw RootNotBracketed("mesh_lambert: no sign change on [0,2]");
        }
        xi[static_cast<std::size_t>(i)] = find_root(impl, 0.0, 2.0);
    }
    // xi(1) slightly exceeds 1; rescale so the last node is pinned.
    const double scale = xi.back();
    std::vector<double> nodes(xi.size());
    nodes[0] = 0.0;
    for (std::size_t i = 1; i + 1 < xi.size(); ++i) nodes[i] = xi[i] / scale;
    nodes.back() = 1.0;
    GeneratedMesh out{Mesh1D::from_nodes(std::move(nodes))};
    out.stats["xi_end"] = scale;
    return out;
}

// ---------------------------------------------------------------------------
// Sidorov / Emelyanov
// ---------------------------------------------------------------------------

namespace {

/// Smooth-grading objective sum_i (h_{i+1}/h_i - 1)^2 for steps h = exp(u).
/// Gradient and Hessian are with respect to the free log-steps u_2..u_{n-1};
/// the penalty couples them through s = sum_i h_i.
struct SidorovObjective {
    int n;
    double u_first, u_last;  // pinned log steps
    double weight;           // penalty weight on (sum h - 1)^2
    double multiplier;       // augmented-Lagrangian estimate

    std::vector<double> full(const std::vector<double>& free) const {
        std::vector<double> u(static_cast<std::size_t>(n));
        u[0] = u_first;
        for (int i = 1; i + 1 < n; ++i) u[static_cast<std::size_t>(i)] = free[static_cast<std::size_t>(i - 1)];
        u[static_cast<std::size_t>(n - 1)] = u_last;
        return u;
    }

    double ratio_part(const std::vector<double>& u) const {
        double s = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            const double r = std::exp(u[static_cast<std::size_t>(i + 1)] - u[static_cast<std::size_t>(i)]) - 1.0;
            s += r * r;
        }
        return s;
    }

    double step_sum(const std::vector<double>& u) const {
        double s = 0.0;
        for (double v : u) s += std::exp(v);
        return s;
    }

    double value(const std::vector<double>& free) const {
        const auto u = full(free);
        const double c = step_sum(u) - 1.0;
        return ratio_part(u) + multiplier * c + weight * c * c;
    }
};

void sidorov_derivatives(const SidorovObjective& obj, const std::vector<double>& free,
                         std::vector<double>& grad, std::vector<double>& hess_diag,
                         std::vector<double>& hess_off, std::vector<double>& rank1,
                         double& rank1_coeff) {
    const int m = static_cast<int>(free.size());
    const auto u = obj.full(free);
    grad.assign(static_cast<std::size_t>(m), 0.0);
    hess_diag.assign(static_cast<std::size_t>(m), 0.0);
    hess_off.assign(static_cast<std::size_t>(m > 0 ? m - 1 : 0), 0.0);
    rank1.assign(static_cast<std::size_t>(m), 0.0);

    // Ratio terms: g_i = e^{u_{i+1}-u_i} - 1 contributes to u_i and u_{i+1}.
    for (int i = 0; i + 1 < obj.n; ++i) {
        const double e = std::exp(u[static_cast<std::size_t>(i + 1)] - u[static_cast<std::size_t>(i)]);
        const double g = e - 1.0;
        const double d_lo = -2.0 * g * e;           // d/du_i
        const double d_hi = 2.0 * g * e;            // d/du_{i+1}
        const double h_lolo = 2.0 * e * (2.0 * e - 1.0);
        const double h_hihi = h_lolo;
        const double h_lohi = -h_lolo;
        const int lo = i - 1;      // free index of u_i (u_1 is free index -1)
        const int hi = i;          // free index of u_{i+1}
        if (lo >= 0 && lo < m) {
            grad[static_cast<std::size_t>(lo)] += d_lo;
            hess_diag[static_cast<std::size_t>(lo)] += h_lolo;
        }
        if (hi >= 0 && hi < m) {
            grad[static_cast<std::size_t>(hi)] += d_hi;
            hess_diag[static_cast<std::size_t>(hi)] += h_hihi;
        }
        if (lo >= 0 && hi < m) {
            hess_off[static_cast<std::size_t>(lo)] += h_lohi;
        }
    }

    // Penalty terms: p(c) = multiplier*c + weight*c^2 with c = sum e^{u} - 1.
    const double c = obj.step_sum(u) - 1.0;
    const double dp = obj.multiplier + 2.0 * obj.weight * c;
    for (int k = 0; k < m; ++k) {
        const double h = std::exp(u[static_cast<std::size_t>(k + 1)]);
        grad[static_cast<std::size_t>(k)] += dp * h;
        hess_diag[static_cast<std::size_t>(k)] += dp * h;
        rank1[static_cast<std::size_t>(k)] = h;
    }
    rank1_coeff = 2.0 * obj.weight;
}

/// Solves (T + a vv^T) x = b with T symmetric tridiagonal via two solves
/// (Sherman-Morrison). Returns false when a pivot degenerates.
bool solve_tridiag_rank1(std::vector<double> diag, const std::vector<double>& off,
                         double a, const std::vector<double>& v, std::vector<double> b,
                         std::vector<double>& x) {
    const std::size_t m = diag.size();
    auto tri_solve = [&](std::vector<double> rhs, std::vector<double>& out) -> bool {
        std::vector<double> d = diag;
        for (std::size_t i = 1; i < m; ++i) {
            if (std::fabs(d[i - 1]) < 1e-300) return false;
            const double w = off[i - 1] / d[i - 1];
            d[i] -= w * off[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        if (std::fabs(d[m - 1]) < 1e-300) return false;
        out.resize(m);
        out[m - 1] = rhs[m - 1] / d[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) {
            out[i] = (rhs[i] - off[i] * out[i + 1]) / d[i];
        }
        return true;
    };
    std::vector<double> y, z;
    if (!tri_solve(b, y)) return false;
    if (!tri_solve(v, z)) return false;
    double vz = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        vz += v[i] * z[i];
        vy += v[i] * y[i];
    }
    const double denom = 1.0 + a * vz;
    if (std::fabs(denom) < 1e-300) return false;
    x.resize(m);
    const double s = a * vy / denom;
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] - s * z[i];
    return true;
}

/// Damped Newton minimization of the penalized objective. Deterministic.
void sidorov_newton(SidorovObjective& obj, std::vector<double>& free) {
    std::vector<double> grad, hd, ho, v;
    double a = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        sidorov_derivatives(obj, free, grad, hd, ho, v, a);
        double gnorm = 0.0;
        for (double g : grad) gnorm = std::fmax(gnorm, std::fabs(g));
        if (gnorm < 1e-13 * std::fmax(1.0, obj.weight)) break;

        std::vector<double> rhs(grad.size());
        for (std::size_t i = 0; i < grad.size(); ++i) rhs[i] = -grad[i];
        std::vector<double> step;
        double ridge = 0.0;
        bool ok = false;
        for (int attempt = 0; attempt < 60; ++attempt) {
            std::vector<double> d = hd;
            for (double& di : d) di += ridge;
            if (solve_tridiag_rank1(d, ho, a, v, rhs, step)) {
                double dot = 0.0;
                for (std::size_t i = 0; i < step.size(); ++i) dot += step[i] * grad[i];
                if (dot < 0.0) {
                    ok = true;
                    break;
                }
            }
            ridge = (ridge == 0.0) ? 1e-8 : ridge * 10.0;
        }
        if (!ok) break;

        const double f0 = obj.value(free);
        double alpha = 1.0;
        std::vector<double> trial(free.size());
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t i = 0; i < free.size(); ++i) trial[i] = free[i] + alpha * step[i];
            if (obj.value(trial) < f0) {
                free = trial;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) break;
    }
}

} // namespace

GeneratedMesh mesh_sidorov(int n, double first_step, double last_step) {
    if (n < 2) throw std::invalid_argument("mesh_sidorov: n must be >= 2");
    require(first_step > 0.0 && last_step > 0.0, "mesh_sidorov: steps must be positive");
    if (n == 2) {
        if (std::fabs(first_step + last_step - 1.0) > 1e-12) {
            throw Infeasible("mesh_sidorov: n=2 requires first_step + last_step = 1");
        }
        return GeneratedMesh{Mesh1D::from_nodes({0.0, first_step, 1.0})};
    }
    if (first_step + last_step >= 1.0) {
        throw Infeasible("mesh_sidorov: first and last step already exceed the interval");
    }

    // Geometric-progression start matching the pinned end steps, scaled
    // towards unit total length before the penalty takes over.
    SidorovObjective obj{n, std::log(first_step), std::log(last_step), 1.0, 0.0};
    std::vector<double> free(static_cast<std::size_t>(n - 2));
    const double du = (obj.u_last - obj.u_first) / (n - 1);
    for (int i = 1; i + 1 < n; ++i) free[static_cast<std::size_t>(i - 1)] = obj.u_first + i * du;

    // Augmented-Lagrangian outer loop: penalty weight doubles until the
    // length constraint |sum h - 1| settles below 1e-10.
    double residual = 1.0;
    for (int outer = 0; outer < 120; ++outer) {
        sidorov_newton(obj, free);
        const auto u = obj.full(free);
        residual = obj.step_sum(u) - 1.0;
        if (std::fabs(residual) < 1e-10) break;
        obj.multiplier += 2.0 * obj.weight * residual;
        obj.weight = std::min(obj.weight * 2.0, 1e12);
    }
    if (std::fabs(residual) > 1e-8) {
        throw Infeasible("mesh_sidorov: constrained minimization did not converge");
    }

    const auto u = obj.full(free);
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    nodes[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i + 1)] =
            nodes[static_cast<std::size_t>(i)] + std::exp(u[static_cast<std::size_t>(i)]);
    }
    // Absorb the residual (below 1e-10) into the interior so the endpoints pin.
    const double scale = 1.0 / nodes.back();
    for (int i = 1; i < n; ++i) nodes[static_cast<std::size_t>(i)] *= scale;
    nodes.back() = 1.0;

    GeneratedMesh out{Mesh1D::from_nodes(std::move(nodes))};
    const auto h = out.mesh.steps();
    double fval = 0.0, dmax = 0.0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        const double r = h[i + 1] / h[i] - 1.0;
        fval += r * r;
        dmax = std::fmax(dmax, std::fabs(h[i + 1] - h[i]));
    }
    out.stats["functional"] = fval;
    out.stats["step_diff_constant"] = dmax * n * n;
    return out;
}

GeneratedMesh mesh_emelyanov_composite(double eps, double gamma, int n) {
    require_even_n(n);
    require(eps > 0.0 && eps < 1.0 && gamma > 0.0,
            "mesh_emelyanov_composite: need eps in (0,1), gamma > 0");
    const double mu = 2.0;
    const double sigma = transition_sigma_bakhvalov(eps, gamma, mu);
    const int half = n / 2;
    const double coarse = (1.0 - sigma) / half;

    // Fine part: Sidorov-minimized grading on [0, sigma], scaled from the unit
    // problem. The first step matches the Bakhvalov-scale layer resolution;
    // first+last average to the uniform fine step so the constraints stay
    // feasible. The clamped case degenerates to A = B (uniform overall).
    double first = sigma / half;
    double last = sigma / half;
    if (sigma < 0.5) {
        first = std::min(2.0 * mu * eps / (gamma * n), sigma / half);
        last = 2.0 * sigma / half - first;
    }
    GeneratedMesh fine = mesh_sidorov(half, first / sigma, last / sigma);

    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= half; ++i) nodes.push_back(sigma * fine.mesh.node(i));
    for (int j = 1; j < half; ++j) nodes.push_back(sigma + coarse * j);
    nodes.push_back(1.0);
    nodes[static_cast<std::size_t>(half)] = sigma;
    nodes[0] = 0.0;

    GeneratedMesh out{Mesh1D::from_nodes(std::move(nodes))};
    out.transition = sigma;
    out.stats["fine_functional"] = fine.stats["functional"];
    double coarse_max = 0.0, coarse_diff = 0.0;
    for (int i = half + 1; i <= n; ++i) {
        coarse_max = std::fmax(coarse_max, out.mesh.step(i));
        if (i > half + 1) coarse_diff = std::fmax(coarse_diff, std::fabs(out.mesh.step(i) - out.mesh.step(i - 1)));
    }
    out.stats["coarse_max_step_n"] = coarse_max * n;
    out.stats["coarse_step_diff_constant"] = coarse_diff * n * n;
    return out;
}

// ---------------------------------------------------------------------------
// Equidistribution and mirroring
// ---------------------------------------------------------------------------

Mesh1D equidistribute_analytic(const MonitorFn& monitor, int n) {
    if (n < 2) throw std::invalid_argument("equidistribute_analytic: n must be >= 2");
    if (!monitor.evaluate) throw std::invalid_argument("equidistribute_analytic: empty monitor");
    const auto table = cumulative_integral(monitor.evaluate, 0.0, 1.0, 1e-12);
    const double total = table.total();
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw QuadratureFailure("equidistribute_analytic: monitor integral is not positive");
    }
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    nodes[0] = 0.0;
    for (int i = 1; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = table.invert(monitor.evaluate, total * i / n);
    }
    nodes[static_cast<std::size_t>(n)] = 1.0;
    return Mesh1D::from_nodes(std::move(nodes));
}

Mesh1D mirror_mesh(const Mesh1D& mesh, LayerSide side) {
    const int n = mesh.intervals();
    switch (side) {
        case LayerSide::Left:
            return mesh;
        case LayerSide::Right: {
            std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) nodes[static_cast<std::size_t>(i)] = 1.0 - mesh.node(n - i);
            nodes[0] = 0.0;
            nodes[static_cast<std::size_t>(n)] = 1.0;
            return Mesh1D::from_nodes(std::move(nodes));
        }
        case LayerSide::Both: {
            if (n % 2 != 0) {
                throw std::invalid_argument("mirror_mesh: Both needs an even interval count");
            }
            // Every other node of the halved mesh reproduces the generating
            // function at n/2 resolution; its mirror fills [1/2, 1].
            const int half = n / 2;
            std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= half; ++i) {
                nodes[static_cast<std::size_t>(i)] = 0.5 * mesh.node(2 * i);
            }
            for (int i = 0; i < half; ++i) {
                nodes[static_cast<std::size_t>(n - i)] = 1.0 - nodes[static_cast<std::size_t>(i)];
            }
            nodes[0] = 0.0;
            nodes[static_cast<std::size_t>(half)] = 0.5;
            nodes[static_cast<std::size_t>(n)] = 1.0;
            return Mesh1D::from_nodes(std::move(nodes));
        }
    }
    throw std::logic_error("mirror_mesh: unknown side");
}

GeneratedMesh build_mesh(const MeshSpec& spec) {
    GeneratedMesh out = [&] {
        switch (spec.family) {
            case MeshFamily::Uniform:
                return GeneratedMesh{Mesh1D::uniform(spec.n)};
            case MeshFamily::Shishkin:
                return mesh_shishkin(spec);
            case MeshFamily::SType:
                return mesh_stype(spec);
            case MeshFamily::BakhvalovOriginal:
                return mesh_bakhvalov_original(spec);
            case MeshFamily::BakhvalovType:
                return mesh_bakhvalov_type(spec);
            case MeshFamily::Gartland:
                return mesh_gartland(spec.eps, spec.gamma, spec.H, GartlandVariant::Original);
            case MeshFamily::GartlandType:
                return mesh_gartland(spec.eps, spec.gamma, spec.H, GartlandVariant::Type);
            case MeshFamily::DuranLombardi:
                return mesh_duran_lombardi(spec.eps, spec.H, spec.kappa);
            case MeshFamily::Lambert:
                return mesh_lambert(spec);
            case MeshFamily::Sidorov:
                return mesh_sidorov(spec.n, spec.first_step, spec.last_step);
            case MeshFamily::EmelyanovComposite:
                return mesh_emelyanov_composite(spec.eps, spec.gamma, spec.n);
            case MeshFamily::Equidistributed:
                return GeneratedMesh{equidistribute_analytic(
                    bakhvalov_monitor(1.0, spec.eps, spec.gamma, spec.mu), spec.n)};
        }
        throw std::logic_error("build_mesh: unknown family");
    }();
    if (spec.side != LayerSide::Left) {
        out.mesh = mirror_mesh(out.mesh, spec.side);
    }
    return out;
}

} // namespace layerkit
