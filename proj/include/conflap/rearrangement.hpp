#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/sphere_geometry.hpp"

namespace conflap {

/// A function on M known only through its distribution: value/weight atoms.
struct Sample {
    double value;
    double weight;
};

struct MeasuredFunction {
    std::vector<Sample> samples;
    double total_volume;
};

/// Builds a MeasuredFunction whose total volume is the exact weight sum.
inline MeasuredFunction make_measured(std::vector<Sample> samples) {
    double v = 0.0;
    for (const Sample& s : samples) v += s.weight;
    return MeasuredFunction{std::move(samples), v};
}

inline void validate(const MeasuredFunction& mf) {
    if (mf.samples.empty()) throw validation_error("MeasuredFunction: empty sample list");
    double sum = 0.0;
    for (const Sample& s : mf.samples) {
        if (!(s.weight > 0.0)) throw validation_error("MeasuredFunction: weights must be positive");
        if (!std::isfinite(s.value)) throw validation_error("MeasuredFunction: values must be finite");
        sum += s.weight;
    }
    if (std::abs(sum - mf.total_volume) > 1e-12 * mf.total_volume)
        throw validation_error("MeasuredFunction: weights do not sum to the stated volume");
}

/// Right-continuous step function on [0, V]: value values[i] on
/// [breakpoints[i], breakpoints[i+1]).
struct StepProfile {
    std::vector<double> breakpoints; // size k+1, from 0 to V
    std::vector<double> values;      // size k

    double total() const { return breakpoints.back(); }

    double eval(double u) const {
        if (u <= breakpoints.front()) return values.front();
        if (u >= breakpoints.back()) return values.back();
        const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), u);
        return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
    }
};

namespace detail {

enum class SortOrder { decreasing, increasing };

inline StepProfile rearrange(const MeasuredFunction& mf, SortOrder order) {
    validate(mf);
    std::vector<std::size_t> idx(mf.samples.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // Ties keep input order; the profile is unaffected, the layout is stable.
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order == SortOrder::decreasing ? mf.samples[a].value > mf.samples[b].value
                                              : mf.samples[a].value < mf.samples[b].value;
    });
    StepProfile p;
    p.breakpoints.reserve(idx.size() + 1);
    p.values.reserve(idx.size());
    p.breakpoints.push_back(0.0);
    double acc = 0.0;
    for (std::size_t i : idx) {
        acc += mf.samples[i].weight;
        p.breakpoints.push_back(acc);
        p.values.push_back(mf.samples[i].value);
    }
    p.breakpoints.back() = mf.total_volume;
    return p;
}

} // namespace detail

/// Decreasing rearrangement f*: sort atoms by value descending and stack
/// their weights as interval lengths.
inline StepProfile decreasing_rearrangement(const MeasuredFunction& mf) {
    return detail::rearrange(mf, detail::SortOrder::decreasing);
}

inline StepProfile increasing_rearrangement(const MeasuredFunction& mf) {
    return detail::rearrange(mf, detail::SortOrder::increasing);
}

/// Exact integral of p(u)^q over [0, V] in step arithmetic.
inline double power_integral(const StepProfile& p, double q) {
    if (!(q >= 1.0)) throw validation_error("power_integral: exponent must be >= 1");
    const bool integral_exponent = q == std::floor(q);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double v = p.values[i];
        if (v < 0.0 && !integral_exponent)
            throw validation_error("power_integral: negative value with fractional exponent");
        sum += std::pow(v, q) * (p.breakpoints[i + 1] - p.breakpoints[i]);
    }
    return sum;
}

/// Both sides of the rearrangement lower bound for the curvature term:
///   lhs = sum_i w_i R_i f_i^2
///   rhs = beta * int_0^{omega_n} [R+*(V - beta u) - R-*(beta u)] f*^2(u) du
/// where beta = V/omega_n, R+* composed that way is the increasing
/// rearrangement of R+, and f* is the decreasing rearrangement of f scaled
/// onto the sphere measure interval. Requires R and f to share the same
/// weighted partition. Guarantees lhs >= rhs up to rounding.
struct HlpBound {
    double lhs;
    double rhs;
};

inline HlpBound hlp_lower_bound(const MeasuredFunction& curvature, const MeasuredFunction& f, Dim n,
                                const QuadratureSpec& spec = {}) {
    validate(curvature);
    validate(f);
    if (curvature.samples.size() != f.samples.size())
        throw validation_error("hlp_lower_bound: partitions differ in size");
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        if (curvature.samples[i].weight != f.samples[i].weight)
            throw validation_error("hlp_lower_bound: partitions carry different weights");

    double lhs = 0.0;
    std::vector<Sample> plus, minus;
    plus.reserve(curvature.samples.size());
    minus.reserve(curvature.samples.size());
    for (std::size_t i = 0; i < curvature.samples.size(); ++i) {
        const double r = curvature.samples[i].value;
        const double fv = f.samples[i].value;
        const double w = f.samples[i].weight;
        lhs += w * r * fv * fv;
        plus.push_back(Sample{std::max(r, 0.0), w});
        minus.push_back(Sample{std::max(-r, 0.0), w});
    }

    const double volume = f.total_volume;
    const double omega = sphere_volume(n, spec);
    const double beta = volume / omega;

    const StepProfile plus_inc = increasing_rearrangement(MeasuredFunction{std::move(plus), volume});
    const StepProfile minus_dec = decreasing_rearrangement(MeasuredFunction{std::move(minus), volume});
    const StepProfile f_dec = decreasing_rearrangement(f);

    // The composite u -> R+*(V - beta u) is exactly the increasing
    // rearrangement of R+ read at the measure point beta*u; evaluate it that
    // way so every profile cuts the u-axis at its own breakpoints over beta.
    std::vector<double> cuts;
    for (double b : f_dec.breakpoints) cuts.push_back(b / beta);
    for (double b : minus_dec.breakpoints) cuts.push_back(b / beta);
    for (double b : plus_inc.breakpoints) cuts.push_back(b / beta);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double rhs = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = std::max(cuts[i], 0.0);
        const double b = std::min(cuts[i + 1], omega);
        if (!(b > a)) continue;
        const double u = 0.5 * (a + b);
        const double fv = f_dec.eval(beta * u);
        const double integrand = plus_inc.eval(beta * u) - minus_dec.eval(beta * u);
        rhs += integrand * fv * fv * (b - a);
    }
    rhs *= beta;
    return HlpBound{lhs, rhs};
}

/// Two-sided Steffensen bounds for int phi*psi with phi decreasing and
/// 0 <= psi <= 1, both given as tabulations on a shared grid and read as
/// piecewise-linear functions:
///   int_{b-gamma}^{b} phi  <=  int phi psi  <=  int_a^{a+gamma} phi,
/// gamma = int psi. All integrals are evaluated exactly for the interpolants.
struct SteffensenBounds {
    double lower;
    double middle;
    double upper;
    double gamma;
};

inline SteffensenBounds steffensen_bounds(std::span<const double> t, std::span<const double> phi,
                                          std::span<const double> psi) {
    const std::size_t k = t.size();
    if (k < 2 || phi.size() != k || psi.size() != k)
        throw validation_error("steffensen_bounds: need matching tabulations with at least 2 nodes");
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!(t[i + 1] > t[i])) throw validation_error("steffensen_bounds: grid must be strictly increasing");
        if (phi[i + 1] > phi[i]) throw validation_error("steffensen_bounds: phi must be decreasing");
    }
    for (double v : psi)
        if (!(v >= 0.0) || !(v <= 1.0)) throw validation_error("steffensen_bounds: psi must lie in [0, 1]");

    const double a = t.front();
    const double b = t.back();

    double gamma = 0.0;  // trapezoid is exact for piecewise-linear psi
    double middle = 0.0; // Simpson per cell is exact for the quadratic phi*psi
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const double h = t[i + 1] - t[i];
        gamma += 0.5 * h * (psi[i] + psi[i + 1]);
        const double pm = 0.5 * (phi[i] + phi[i + 1]);
        const double sm = 0.5 * (psi[i] + psi[i + 1]);
        middle += h / 6.0 * (phi[i] * psi[i] + 4.0 * pm * sm + phi[i + 1] * psi[i + 1]);
    }

    // Exact integral of the piecewise-linear phi over [lo, hi].
    const auto phi_integral = [&](double lo, double hi) {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const double ca = std::max(lo, t[i]);
            const double cb = std::min(hi, t[i + 1]);
            if (!(cb > ca)) continue;
            const double h = t[i + 1] - t[i];
            const double ya = phi[i] + (phi[i + 1] - phi[i]) * (ca - t[i]) / h;
            const double yb = phi[i] + (phi[i + 1] - phi[i]) * (cb - t[i]) / h;
            sum += 0.5 * (ya + yb) * (cb - ca);
        }
        return sum;
    };

    return SteffensenBounds{phi_integral(b - gamma, b), middle, phi_integral(a, a + gamma), gamma};
}

/// gamma bookkeeping of the symmetrization argument:
///   gamma+ = omega_n - ||R+||_1 / (beta sup R+),  gamma- = ||R-||_1 / (beta sup R-),
/// with the empty-support conventions gamma+ = omega_n when sup R+ = 0 and
/// gamma- = 0 when sup R- = 0.
struct GammaPair {
    double gamma_plus;
    double gamma_minus;
};

inline GammaPair gamma_pair(const ManifoldSummary& s, const QuadratureSpec& spec = {}) {
    validate(s);
    const double omega = sphere_volume(s.n, spec);
    const double beta = s.volume / omega;
    GammaPair g{omega, 0.0};
    if (s.scalar.sup_plus > 0.0) g.gamma_plus = omega - s.scalar.l1_plus / (beta * s.scalar.sup_plus);
    if (s.scalar.sup_minus > 0.0) g.gamma_minus = s.scalar.l1_minus / (beta * s.scalar.sup_minus);
    return g;
}

/// Radial step function on [0, pi], breakpoints expressed as cap radii.
struct RadialProfile {
    Dim n;
    std::vector<double> radii;  // size k+1, from 0 to pi
    std::vector<double> values; // size k

    double eval(double r) const {
        if (r <= radii.front()) return values.front();
        if (r >= radii.back()) return values.back();
        const auto it = std::upper_bound(radii.begin(), radii.end(), r);
        return values[static_cast<std::size_t>(it - radii.begin()) - 1];
    }
};

/// Transplants a measure-interval profile onto S^n as a radial function about
/// the north pole: g(r) = p(V * cap_volume(n, r)/omega_n).
inline RadialProfile project_to_sphere(const StepProfile& p, Dim n, const QuadratureSpec& spec = {}) {
    RadialProfile out{n, {}, p.values};
    out.radii.reserve(p.breakpoints.size());
    const double volume = p.total();
    for (double b : p.breakpoints)
        out.radii.push_back(cap_radius_for_fraction(n, std::clamp(b / volume, 0.0, 1.0), spec).r);
    out.radii.front() = 0.0;
    out.radii.back() = pi;
    return out;
}

/// Integral of g^q over S^n for a radial step profile, exact in cap volumes.
inline double radial_power_integral(const RadialProfile& g, double q, const QuadratureSpec& spec = {}) {
    if (!(q >= 1.0)) throw validation_error("radial_power_integral: exponent must be >= 1");
    double sum = 0.0;
    double prev_vol = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double vol = cap_volume(g.n, Radius(g.radii[i + 1]), spec);
        sum += std::pow(g.values[i], q) * (vol - prev_vol);
        prev_vol = vol;
    }
    return sum;
}

} // namespace conflap
