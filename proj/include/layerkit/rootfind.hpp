#pragma once

#include <functional>

namespace layerkit {

/// Bracketed bisection/secant hybrid.
///
/// Requires a sign change on [lo, hi] and converges to relative tolerance
/// `rel_tol` (bracket width relative to max(1, |root|)). Deterministic:
/// the same inputs always produce the same root.
/// Throws RootNotBracketed when f(lo) and f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-12, int max_iter = 200);

} // namespace layerkit
