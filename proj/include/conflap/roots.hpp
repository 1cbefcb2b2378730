#pragma once

#include <cmath>
#include <concepts>

#include "conflap/errors.hpp"

namespace conflap {

/// Bisection on a bracketing interval. Requires f(lo) and f(hi) of opposite
/// sign (zero counts as either). Converges to absolute tolerance `x_tol` in
/// the abscissa, or to ulp collapse, whichever comes first.
template <std::invocable<double> F>
double bisect_root(F&& f, double lo, double hi, double x_tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw solver_error("bisect_root: interval does not bracket a sign change");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= x_tol) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace conflap
