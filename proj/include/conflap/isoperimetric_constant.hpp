#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "conflap/errors.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/quadrature.hpp"
#include "conflap/roots.hpp"
#include "conflap/sphere_geometry.hpp"

namespace conflap {

/// Curvature-diameter hypothesis: r0 * d^2 >= (n-1) * epsilon * alpha^2 with
/// epsilon in {-1, 0, 1} and alpha >= 0.
struct Hypothesis {
    int epsilon;
    double alpha;
};

inline void validate(const Hypothesis& h) {
    if (h.epsilon < -1 || h.epsilon > 1)
        throw validation_error("Hypothesis: epsilon must be -1, 0 or 1");
    if (!(h.alpha >= 0.0)) throw validation_error("Hypothesis: alpha must be nonnegative");
}

/// Isoperimetric comparison constant a(n, epsilon, alpha) together with the
/// hypothesis it was computed under. For epsilon = -1 the transcendental root
/// c(alpha) is carried along.
struct BbgConstant {
    double value;
    Hypothesis hypothesis;
    std::optional<double> c_alpha;
};

inline bool check_hypothesis(const ManifoldSummary& s, const Hypothesis& h) {
    validate(s);
    validate(h);
    return s.ricci_lower * s.diameter * s.diameter >=
           (s.n.n - 1) * static_cast<double>(h.epsilon) * h.alpha * h.alpha;
}

namespace detail {

// Negative-curvature band balance: the defining relation for c(alpha) is
//
//   x * int_0^alpha (cosh t + x sinh t)^(n-1) dt = sigma_n,
//
// strictly increasing in x, so a unique positive root exists for every
// alpha > 0. Substituting x = tanh y turns it into
// sigma_n cosh^n y = sinh y * int_y^{y+alpha} cosh^{n-1} t dt, the form the
// band equation is usually quoted in; that form only covers roots x < 1
// (it loses the small-alpha regime), so the x-form is the one solved here.
// As alpha -> 0 the root satisfies alpha * x -> (1 + n sigma_n)^{1/n} - 1,
// matching the epsilon = 0 branch.
inline double band_balance(Dim n, double alpha, double x, const QuadratureSpec& spec) {
    const double k = static_cast<double>(n.n - 1);
    const double band = integrate(
        [k, x](double t) { return std::pow(std::cosh(t) + x * std::sinh(t), k); }, 0.0, alpha, spec);
    return x * band - sigma(n, spec);
}

} // namespace detail

/// Root c(alpha) of the band-balance equation for the epsilon = -1 branch.
inline double solve_c_alpha(Dim n, double alpha, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("solve_c_alpha: requires n >= 2");
    if (!(alpha > 0.0)) throw validation_error("solve_c_alpha: alpha must be positive");
    if (alpha > 600.0 / n.n)
        throw solver_error("solve_c_alpha: alpha too large, cosh^n overflows double range");

    auto f = [&](double x) { return detail::band_balance(n, alpha, x, spec); };
    // f(0) = -sigma_n < 0 and f is increasing; double the upper end until the
    // sign changes. f(x) >= x * alpha, so the doubling terminates quickly.
    double hi = 1.0;
    const int doubling_budget = 60;
    int step = 0;
    while (f(hi) <= 0.0) {
        hi *= 2.0;
        if (++step > doubling_budget)
            throw solver_error("solve_c_alpha: no sign change within the doubling budget");
    }
    // The root decays like exp(-(n-1)*alpha), so bisect to ulp collapse
    // rather than to any absolute tolerance.
    const double root = bisect_root(f, 0.0, hi, 0.0, 1200);
    const double residual = std::abs(f(root));
    if (residual > 1e-10)
        throw solver_error("solve_c_alpha: residual " + std::to_string(residual) + " exceeds tolerance");
    return root;
}

/// The constant a(n, epsilon, alpha):
///   epsilon = 1:  alpha * [sigma_n / (2 int_0^{alpha/2} cos^{n-1})]^{1/n},  0 < alpha <= pi
///   epsilon = 0:  (1 + n sigma_n)^{1/n} - 1
///   epsilon = -1: alpha * c(alpha)
inline BbgConstant bbg_constant(Dim n, const Hypothesis& h, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("bbg_constant: requires n >= 2");
    validate(h);
    const double k = static_cast<double>(n.n - 1);
    switch (h.epsilon) {
    case 1: {
        if (!(h.alpha > 0.0) || h.alpha > pi)
            throw validation_error("bbg_constant: epsilon = 1 requires 0 < alpha <= pi");
        const double band =
            2.0 * integrate([k](double t) { return std::pow(std::cos(t), k); }, 0.0, 0.5 * h.alpha, spec);
        const double value = h.alpha * std::pow(sigma(n, spec) / band, 1.0 / n.n);
        return BbgConstant{value, h, std::nullopt};
    }
    case 0: {
        const double value = std::pow(1.0 + n.n * sigma(n, spec), 1.0 / n.n) - 1.0;
        return BbgConstant{value, h, std::nullopt};
    }
    default: {
        if (!(h.alpha > 0.0)) throw validation_error("bbg_constant: epsilon = -1 requires alpha > 0");
        const double c = solve_c_alpha(n, h.alpha, spec);
        return BbgConstant{h.alpha * c, h, c};
    }
    }
}

/// Largest constant over the hypotheses admissible for the summary.
/// Candidates: epsilon = 1 with the tightest alpha (capped at pi) when
/// r0 > 0; epsilon = 0 whenever r0 >= 0; epsilon = -1 with the smallest
/// admissible alpha when r0 < 0. Ties resolve in that order.
inline BbgConstant best_hypothesis(const ManifoldSummary& s, const QuadratureSpec& spec = {}) {
    validate(s);
    const double d = s.diameter;
    const double r0 = s.ricci_lower;
    const int n = s.n.n;

    // Rounding in alpha = d*sqrt(|r0|/(n-1)) may land a hair outside the
    // admissible set; nudge back inside.
    const auto admissible_alpha = [&](int eps, double alpha) {
        Hypothesis h{eps, alpha};
        for (int i = 0; i < 8 && !check_hypothesis(s, h); ++i)
            h.alpha = std::nextafter(h.alpha, 0.0);
        return h;
    };

    std::optional<BbgConstant> best;
    const auto consider = [&](const BbgConstant& cand) {
        if (!best || cand.value > best->value) best = cand;
    };

    if (r0 > 0.0) {
        const double alpha = std::min(pi, d * std::sqrt(r0 / (n - 1)));
        consider(bbg_constant(s.n, admissible_alpha(1, alpha), spec));
    }
    if (r0 >= 0.0) {
        consider(bbg_constant(s.n, Hypothesis{0, 0.0}, spec));
    }
    if (r0 < 0.0) {
        double alpha = d * std::sqrt(-r0 / (n - 1));
        // Here admissibility needs alpha^2 >= -r0 d^2/(n-1); nudge upward.
        Hypothesis h{-1, alpha};
        for (int i = 0; i < 8 && !check_hypothesis(s, h); ++i)
            h.alpha = std::nextafter(h.alpha, std::numeric_limits<double>::infinity());
        consider(bbg_constant(s.n, h, spec));
    }
    if (!best) throw solver_error("best_hypothesis: no admissible hypothesis");
    return *best;
}

} // namespace conflap
