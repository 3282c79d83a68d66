#include "layerkit/quadrature.hpp"

#include <array>
#include <cmath>

#include "layerkit/errors.hpp"
#include "layerkit/rootfind.hpp"

namespace layerkit {

namespace {

struct GaussRule {
    const double* t;
    const double* w;
    int n;
};

constexpr std::array<double, 3> kT3{-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kW3{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

constexpr std::array<double, 5> kT5{-0.9061798459386640, -0.5384693101056831, 0.0,
                                    0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kW5{0.2369268850561891, 0.4786286704993665,
                                    0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};

double apply(const GaussRule& rule, const RealFn& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < rule.n; ++i) {
        s += rule.w[i] * f(mid + half * rule.t[i]);
    }
    return half * s;
}

struct AdaptiveState {
    const RealFn* f;
    double tol;  // absolute tolerance for the whole integral
    int max_depth;
};

double adapt_rec(const AdaptiveState& st, double a, double b, double whole, int depth) {
    const GaussRule g5{kT5.data(), kW5.data(), 5};
    const double mid = 0.5 * (a + b);
    const double left = apply(g5, *st.f, a, mid);
    const double right = apply(g5, *st.f, mid, b);
    const double refined = left + right;
    if (!std::isfinite(refined)) {
        throw QuadratureFailure("integrate: non-finite integrand value");
    }
    if (depth >= st.max_depth || std::fabs(refined - whole) <= st.tol) {
        return refined;
    }
    AdaptiveState half = st;
    half.tol = 0.5 * st.tol;
    return adapt_rec(half, a, mid, left, depth + 1) + adapt_rec(half, mid, b, right, depth + 1);
}

} // namespace

double gauss3(const RealFn& f, double a, double b) {
    return apply(GaussRule{kT3.data(), kW3.data(), 3}, f, a, b);
}

double gauss5(const RealFn& f, double a, double b) {
    return apply(GaussRule{kT5.data(), kW5.data(), 5}, f, a, b);
}

double integrate(const RealFn& f, double a, double b, double rel_tol, double abs_tol,
                 int max_depth) {
    if (a == b) return 0.0;
    const double rough = gauss5(f, a, b);
    if (!std::isfinite(rough)) {
        throw QuadratureFailure("integrate: non-finite integrand value");
    }
    AdaptiveState st{&f, std::fmax(abs_tol, rel_tol * std::fabs(rough)), max_depth};
    if (st.tol <= 0.0) st.tol = 1e-300;
    return adapt_rec(st, a, b, rough, 0);
}

namespace {

void cumulative_rec(const RealFn& f, double a, double b, double whole, double tol, int depth,
                    int max_depth, CumulativeTable& out) {
    const double mid = 0.5 * (a + b);
    const double left = gauss5(f, a, mid);
    const double right = gauss5(f, mid, b);
    if (!std::isfinite(left + right)) {
        throw QuadratureFailure("cumulative_integral: non-finite integrand value");
    }
    if (depth >= max_depth || std::fabs(left + right - whole) <= tol) {
        out.x.push_back(mid);
        out.cum.push_back(out.cum.back() + left);
        out.x.push_back(b);
        out.cum.push_back(out.cum.back() + right);
        return;
    }
    cumulative_rec(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, out);
    cumulative_rec(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, out);
}

} // namespace

CumulativeTable cumulative_integral(const RealFn& f, double a, double b, double rel_tol,
                                    int max_depth) {
    CumulativeTable table;
    table.x.push_back(a);
    table.cum.push_back(0.0);
    const double rough = gauss5(f, a, b);
    if (!std::isfinite(rough)) {
        throw QuadratureFailure("cumulative_integral: non-finite integrand value");
    }
    double tol = rel_tol * std::fmax(std::fabs(rough), 1e-300);
    cumulative_rec(f, a, b, rough, tol, 0, max_depth, table);
    return table;
}

double CumulativeTable::invert(const RealFn& f, double target) const {
    if (target <= 0.0) return x.front();
    if (target >= total()) return x.back();

    // Panel lookup, then a local solve of cum(x) = target inside the panel.
    std::size_t lo = 0;
    std::size_t hi = cum.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (cum[mid] < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double base = cum[lo];
    const double a = x[lo];
    const double b = x[hi];
    auto g = [&](double t) { return base + gauss5(f, a, t) - target; };
    const double ga = g(a);
    const double gb = g(b);
    if (ga >= 0.0) return a;
    if (gb <= 0.0) return b;
    return find_root(g, a, b, 1e-14);
}

} // namespace layerkit
