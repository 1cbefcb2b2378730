#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "conflap/errors.hpp"
#include "conflap/quadrature.hpp"
#include "conflap/roots.hpp"

namespace conflap {

inline constexpr double pi = std::numbers::pi;

/// Dimension of the model sphere S^n. Geometric quantities need n >= 2;
/// the conformal exponents need n >= 3 and their accessors enforce that.
struct Dim {
    int n;

    explicit Dim(int dimension) : n(dimension) {
        if (n < 1) throw validation_error("Dim: dimension must be at least 1");
    }
};

/// Geodesic distance on S^n, radians in [0, pi].
struct Radius {
    double r;

    explicit Radius(double value) : r(value) {
        if (!(r >= 0.0) || !(r <= pi)) throw validation_error("Radius: must lie in [0, pi]");
    }
};

/// c_n = 4(n-1)/(n-2), the weight in front of the Laplacian in the
/// conformally covariant operator c_n*Lap + R.
inline double conformal_weight(Dim n) {
    if (n.n < 3) throw validation_error("conformal_weight: requires n >= 3");
    return 4.0 * (n.n - 1) / static_cast<double>(n.n - 2);
}

/// Critical Sobolev exponent p = 2n/(n-2).
inline double critical_exponent(Dim n) {
    if (n.n < 3) throw validation_error("critical_exponent: requires n >= 3");
    return 2.0 * n.n / static_cast<double>(n.n - 2);
}

/// sigma_n = integral of (sin t)^(n-1) over [0, pi].
inline double sigma(Dim n, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("sigma: requires n >= 2");
    const double k = static_cast<double>(n.n - 1);
    return integrate([k](double t) { return std::pow(std::sin(t), k); }, 0.0, pi, spec);
}

/// omega_n = vol(S^n, can), via omega_n = omega_{n-1} * sigma_n with omega_1 = 2*pi.
inline double sphere_volume(Dim n, const QuadratureSpec& spec = {}) {
    if (n.n < 1) throw validation_error("sphere_volume: requires n >= 1");
    double vol = 2.0 * pi;
    for (int k = 2; k <= n.n; ++k) vol *= sigma(Dim(k), spec);
    return vol;
}

/// Volume of a geodesic ball of radius r on S^n: omega_{n-1} * int_0^r sin^{n-1}.
inline double cap_volume(Dim n, Radius r, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("cap_volume: requires n >= 2");
    if (r.r == 0.0) return 0.0;
    const double k = static_cast<double>(n.n - 1);
    const double band = integrate([k](double t) { return std::pow(std::sin(t), k); }, 0.0, r.r, spec);
    return sphere_volume(Dim(n.n - 1), spec) * band;
}

/// Inverse of the normalized cap volume: the unique r with
/// cap_volume(n, r)/omega_n = s. Monotone bisection on [0, pi].
inline Radius cap_radius_for_fraction(Dim n, double s, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("cap_radius_for_fraction: requires n >= 2");
    if (!(s >= 0.0) || !(s <= 1.0))
        throw validation_error("cap_radius_for_fraction: fraction must lie in [0, 1]");
    if (s == 0.0) return Radius(0.0);
    if (s == 1.0) return Radius(pi);
    const double total = sphere_volume(n, spec);
    const double r = bisect_root(
        [&](double t) { return cap_volume(n, Radius(t), spec) / total - s; }, 0.0, pi, 1e-12);
    return Radius(r);
}

/// Isoperimetric profile of the round sphere: relative boundary volume of the
/// cap holding relative volume s.
inline double iso_profile(Dim n, double s, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("iso_profile: requires n >= 2");
    if (!(s >= 0.0) || !(s <= 1.0)) throw validation_error("iso_profile: fraction must lie in [0, 1]");
    if (s == 0.0 || s == 1.0) return 0.0;
    const Radius r = cap_radius_for_fraction(n, s, spec);
    const double k = static_cast<double>(n.n - 1);
    return sphere_volume(Dim(n.n - 1), spec) * std::pow(std::sin(r.r), k) / sphere_volume(n, spec);
}

} // namespace conflap
