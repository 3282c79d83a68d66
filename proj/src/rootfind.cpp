#include "layerkit/rootfind.hpp"

#include <cmath>

#include "layerkit/errors.hpp"

namespace layerkit {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) {
        throw RootNotBracketed("find_root: no sign change on the given interval");
    }

    double width_prev = hi - lo;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::fmax(1.0, std::fabs(mid))) return mid;

        // Secant candidate from the bracket endpoints; fall back to the
        // midpoint when it lands outside or bisection has been stalling.
        double cand = mid;
        const double denom = fhi - flo;
        if (it % 2 == 0 || width_prev <= 0.0) {
            if (denom != 0.0) {
                const double s = hi - fhi * (hi - lo) / denom;
                const double guard = 0.01 * (hi - lo);
                if (s > lo + guard && s < hi - guard) cand = s;
            }
        }
        width_prev = hi - lo;

        const double fc = f(cand);
        if (fc == 0.0) return cand;
        if (std::signbit(fc) == std::signbit(fhi)) {
            hi = cand;
            fhi = fc;
        } else {
            lo = cand;
            flo = fc;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace layerkit
