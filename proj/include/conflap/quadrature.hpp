#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>

#include "conflap/errors.hpp"

namespace conflap {

/// Controls the shared quadrature engine: composite Gauss-Legendre panels,
/// dyadically refined until two successive refinements agree to `rel_tol`.
struct QuadratureSpec {
    double rel_tol = 1e-12;
    int max_depth = 22;

    void validate() const {
        if (!(rel_tol > 0.0)) throw validation_error("QuadratureSpec: rel_tol must be positive");
        if (max_depth < 1) throw validation_error("QuadratureSpec: max_depth must be at least 1");
    }
};

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1]. Nodes are roots of P_16 found by
// Newton iteration from the Chebyshev initial guess; computed once.
struct GaussRule16 {
    std::array<double, 16> node{};
    std::array<double, 16> weight{};
};

inline const GaussRule16& gauss16() {
    static const GaussRule16 rule = [] {
        GaussRule16 r;
        constexpr int n = 16;
        constexpr double pi = 3.14159265358979323846;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                // Legendre recurrence for P_n(x) and P'_n(x)
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.node[i] = -x;
            r.node[n - 1 - i] = x;
            double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.weight[i] = w;
            r.weight[n - 1 - i] = w;
        }
        return r;
    }();
    return rule;
}

// Single 16-node panel over [a, b].
template <std::invocable<double> F>
double gauss16_panel(F&& f, double a, double b) {
    const GaussRule16& r = gauss16();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) sum += r.weight[i] * f(mid + half * r.node[i]);
    return half * sum;
}

struct CompositeEstimate {
    double value;
    double magnitude; // sum of |panel integrals|, the cancellation-proof scale
};

template <std::invocable<double> F>
CompositeEstimate gauss16_composite(F&& f, double a, double b, std::size_t panels) {
    const double width = (b - a) / static_cast<double>(panels);
    CompositeEstimate est{0.0, 0.0};
    for (std::size_t k = 0; k < panels; ++k) {
        const double lo = a + width * static_cast<double>(k);
        const double hi = (k + 1 == panels) ? b : lo + width;
        const double piece = gauss16_panel(f, lo, hi);
        est.value += piece;
        est.magnitude += std::abs(piece);
    }
    return est;
}

} // namespace detail

/// Adaptive integral of a smooth function over [a, b]. Panels double until
/// successive estimates differ by less than spec.rel_tol relative to scale.
template <std::invocable<double> F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double prev = detail::gauss16_panel(f, a, b);
    std::size_t panels = 1;
    for (int depth = 1; depth <= spec.max_depth; ++depth) {
        panels *= 2;
        const auto [cur, magnitude] = detail::gauss16_composite(f, a, b, panels);
        const double scale = std::max({std::abs(cur), std::abs(prev), magnitude, 1e-300});
        if (std::abs(cur - prev) <= spec.rel_tol * scale) return sign * cur;
        prev = cur;
    }
    throw solver_error("integrate: no convergence within refinement budget");
}

} // namespace conflap
