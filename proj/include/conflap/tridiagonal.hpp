#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "conflap/errors.hpp"

namespace conflap {

/// Symmetric tridiagonal matrix, diagonal of size m and off-diagonal m-1.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
};

namespace tridiag {

inline double inf_norm(const SymTridiagonal& a) {
    double norm = 0.0;
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        double row = std::abs(a.diag[i]);
        if (i > 0) row += std::abs(a.off[i - 1]);
        if (i + 1 < m) row += std::abs(a.off[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

/// Number of eigenvalues strictly below x, by the signs of the LDL^T pivots.
inline int count_below(const SymTridiagonal& a, double x) {
    const std::size_t m = a.size();
    double max_off2 = 1.0;
    for (double e : a.off) max_off2 = std::max(max_off2, e * e);
    const double pivmin = std::numeric_limits<double>::min() * max_off2;

    int count = 0;
    double q = a.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < m; ++i) {
        q = a.diag[i] - x - a.off[i - 1] * a.off[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

inline std::pair<double, double> gershgorin_bounds(const SymTridiagonal& a) {
    const std::size_t m = a.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
        double spread = 0.0;
        if (i > 0) spread += std::abs(a.off[i - 1]);
        if (i + 1 < m) spread += std::abs(a.off[i]);
        lo = std::min(lo, a.diag[i] - spread);
        hi = std::max(hi, a.diag[i] + spread);
    }
    const double pad = 1e-10 + 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    return {lo - pad, hi + pad};
}

/// k-th smallest eigenvalue (0-based) by bisection on the pivot-sign count.
/// An optional caller bracket tightens the start; it is verified and widened
/// to Gershgorin if it does not actually enclose the target.
inline double eigenvalue_k(const SymTridiagonal& a, int k, double abs_tol = 1e-10,
                           const double* bracket_lo = nullptr, const double* bracket_hi = nullptr) {
    if (k < 0 || static_cast<std::size_t>(k) >= a.size())
        throw validation_error("eigenvalue_k: index out of range");
    auto [lo, hi] = gershgorin_bounds(a);
    if (bracket_lo && count_below(a, *bracket_lo) <= k) lo = std::max(lo, *bracket_lo);
    if (bracket_hi && count_below(a, *bracket_hi) >= k + 1) hi = std::min(hi, *bracket_hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (count_below(a, mid) <= k)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= abs_tol) break;
    }
    return 0.5 * (lo + hi);
}

/// Solves (A - shift*I) x = b by Gaussian elimination with partial pivoting;
/// the fill is confined to a second superdiagonal.
inline std::vector<double> solve_shifted(const SymTridiagonal& a, double shift, std::vector<double> b) {
    const std::size_t m = a.size();
    std::vector<double> d(m), du(m > 1 ? m - 1 : 0), du2(m > 2 ? m - 2 : 0, 0.0), dl(m > 1 ? m - 1 : 0);
    for (std::size_t i = 0; i < m; ++i) d[i] = a.diag[i] - shift;
    for (std::size_t i = 0; i + 1 < m; ++i) du[i] = dl[i] = a.off[i];

    const double tiny = std::numeric_limits<double>::min() * 4.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            double piv = d[i];
            if (std::abs(piv) < tiny) piv = (piv < 0.0 ? -tiny : tiny);
            const double mult = dl[i] / piv;
            d[i + 1] -= mult * du[i];
            b[i + 1] -= mult * b[i];
            if (i + 2 < m) { /* du2 stays zero on this branch */ }
            d[i] = piv;
            dl[i] = 0.0;
        } else {
            // swap rows i and i+1
            const double mult = d[i] / dl[i];
            d[i] = dl[i];
            const double tmp_du = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp_du - mult * d[i + 1];
            if (i + 2 < m) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du[i + 1];
            }
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= mult * b[i];
            dl[i] = 0.0;
        }
    }
    // back substitution
    std::vector<double> x(m);
    for (std::size_t ii = m; ii-- > 0;) {
        double sum = b[ii];
        if (ii + 1 < m) sum -= du[ii] * x[ii + 1];
        if (ii + 2 < m) sum -= du2[ii] * x[ii + 2];
        double piv = d[ii];
        if (std::abs(piv) < tiny) piv = (piv < 0.0 ? -tiny : tiny);
        x[ii] = sum / piv;
    }
    return x;
}

inline std::vector<double> matvec(const SymTridiagonal& a, const std::vector<double>& x) {
    const std::size_t m = a.size();
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        double v = a.diag[i] * x[i];
        if (i > 0) v += a.off[i - 1] * x[i - 1];
        if (i + 1 < m) v += a.off[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

inline double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

struct EigenPair {
    double value;
    std::vector<double> vector; // unit Euclidean norm
    double residual;            // ||A v - value v||_2
};

/// Inverse iteration at a converged bisection shift, then a Rayleigh-quotient
/// polish of the eigenvalue.
inline EigenPair refine_eigenpair(const SymTridiagonal& a, double shift, int iterations = 3) {
    const std::size_t m = a.size();
    std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
    for (int it = 0; it < iterations; ++it) {
        x = solve_shifted(a, shift, std::move(x));
        const double nrm = norm2(x);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw solver_error("refine_eigenpair: inverse iteration broke down");
        for (double& v : x) v /= nrm;
    }
    const std::vector<double> ax = matvec(a, x);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < m; ++i) rayleigh += x[i] * ax[i];
    double resid = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ax[i] - rayleigh * x[i];
        resid += r * r;
    }
    return EigenPair{rayleigh, std::move(x), std::sqrt(resid)};
}

} // namespace tridiag

} // namespace conflap
