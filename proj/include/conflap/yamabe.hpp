#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/radial_spectrum.hpp"

namespace conflap {

struct YamabeOptions {
    int grid_size = 500;
    double initial_step = 0.5;
    int max_iterations = 10000;
    double stagnation_tol = 1e-10; // relative quotient change over the window
    int stagnation_window = 5;
    int random_starts = 0;
    std::uint64_t seed = 0;
    QuadratureSpec quadrature{};

    void validate() const {
        if (grid_size < 16) throw validation_error("YamabeOptions: grid_size must be at least 16");
        if (!(initial_step > 0.0)) throw validation_error("YamabeOptions: initial_step must be positive");
        if (max_iterations < 1) throw validation_error("YamabeOptions: max_iterations must be positive");
        if (!(stagnation_tol > 0.0)) throw validation_error("YamabeOptions: stagnation_tol must be positive");
        if (stagnation_window < 3) throw validation_error("YamabeOptions: stagnation_window must be >= 3");
        if (random_starts < 0) throw validation_error("YamabeOptions: random_starts must be nonnegative");
    }
};

struct StartOutcome {
    std::string label;
    double value;
    bool converged;
    int iterations;
};

struct YamabeResult {
    double rho;
    std::vector<double> minimizer; // positive, normalized to sum w u^p = 1
    int iterations;
    double el_residual;
    bool converged;
    std::string start_label;
    std::vector<StartOutcome> starts;
};

namespace detail {

// p-th powers show up in the innermost loops; the integer exponents of
// n = 3, 4 deserve the multiply path.
struct PowerCache {
    double exponent;
    int as_int;
    bool integral;

    explicit PowerCache(double q)
        : exponent(q), as_int(static_cast<int>(std::lround(q))),
          integral(std::abs(q - std::lround(q)) < 1e-12) {}

    double operator()(double base) const {
        if (!integral) return std::pow(base, exponent);
        double out = 1.0;
        for (int i = 0; i < as_int; ++i) out *= base;
        return out;
    }
};

struct QuotientEvaluator {
    const RadialGrid& grid;
    const AssembledForms& forms;
    PowerCache pow_p;
    PowerCache pow_pm1;

    QuotientEvaluator(const RadialGrid& g, const AssembledForms& f)
        : grid(g), forms(f), pow_p(critical_exponent(g.n)), pow_pm1(critical_exponent(g.n) - 1.0) {}

    double volume_term(const std::vector<double>& u) const {
        double d = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) d += forms.mass[j] * pow_p(u[j]);
        return d;
    }

    // Rescales u in place to volume_term(u) = 1; false when degenerate.
    bool normalize(std::vector<double>& u) const {
        const double d = volume_term(u);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double scale = std::pow(d, -1.0 / pow_p.exponent);
        for (double& x : u) x *= scale;
        return true;
    }

    double value(const std::vector<double>& u) const {
        return quadratic_form(forms, u, grid); // assumes volume_term(u) = 1
    }

    // grad J = 2 (T u - J w.u^{p-1}) on the normalized slice.
    std::vector<double> gradient(const std::vector<double>& u, double j_value) const {
        std::vector<double> g = tridiag::matvec(forms.stiffness, u);
        for (std::size_t j = 0; j < u.size(); ++j)
            g[j] = 2.0 * (g[j] - j_value * forms.mass[j] * pow_pm1(u[j]));
        return g;
    }
};

struct StartRun {
    double value;
    std::vector<double> minimizer;
    bool converged;
    int iterations;
    std::vector<double> history; // accepted quotient values, nonincreasing
};

// Projected gradient descent over the cone {u >= 0}: step, absolute value,
// renormalize, backtrack on the quotient. A failed line search means a
// stationary point at this resolution and counts as convergence.
inline StartRun minimize_from(std::vector<double> u, const QuotientEvaluator& eval,
                              const YamabeOptions& opts) {
    StartRun run{0.0, {}, false, 0, {}};
    if (!eval.normalize(u)) throw solver_error("minimize_quotient: degenerate start");
    double value = eval.value(u);
    run.history.push_back(value);
    double step = opts.initial_step;

    for (int it = 0; it < opts.max_iterations; ++it) {
        const std::vector<double> grad = eval.gradient(u, value);
        bool accepted = false;
        std::vector<double> trial(u.size());
        for (int half = 0; half < 60; ++half) {
            for (std::size_t j = 0; j < u.size(); ++j) trial[j] = std::abs(u[j] - step * grad[j]);
            if (!eval.normalize(trial)) {
                step *= 0.5;
                continue;
            }
            const double trial_value = eval.value(trial);
            if (trial_value < value) {
                u.swap(trial);
                value = trial_value;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        run.iterations = it + 1;
        if (!accepted) {
            run.converged = true;
            break;
        }
        run.history.push_back(value);
        step = std::min(step * 1.5, 1e6 * opts.initial_step);
        const std::size_t w = static_cast<std::size_t>(opts.stagnation_window);
        if (run.history.size() > w) {
            const double before = run.history[run.history.size() - 1 - w];
            if (std::abs(before - value) <= opts.stagnation_tol * (1.0 + std::abs(value))) {
                run.converged = true;
                break;
            }
        }
    }
    run.value = value;
    run.minimizer = std::move(u);
    return run;
}

// ||T u - rho w.u^{p-1}||_2 relative to the operator action on u.
inline double stationarity_residual(const AssembledForms& forms, const std::vector<double>& u,
                                    double rho, double p) {
    const PowerCache pow_pm1(p - 1.0);
    const std::vector<double> tu = tridiag::matvec(forms.stiffness, u);
    double tu_norm = 0.0, res = 0.0;
    for (std::size_t j = 0; j < tu.size(); ++j) {
        tu_norm += tu[j] * tu[j];
        const double r = tu[j] - rho * forms.mass[j] * pow_pm1(u[j]);
        res += r * r;
    }
    return std::sqrt(res) / (1.0 + std::sqrt(tu_norm));
}

inline std::vector<double> bump_start(const RadialGrid& grid, bool south) {
    const double width = pi / 3.0;
    std::vector<double> u(static_cast<std::size_t>(grid.m), 0.0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double dist = south ? pi - grid.center[j] : grid.center[j];
        const double x = dist / width;
        if (x < 1.0) {
            const double c = std::cos(0.5 * pi * x);
            u[j] = c * c;
        }
    }
    return u;
}

} // namespace detail

/// Yamabe-type quotient Q_h(u) / (sum w u^p)^{2/p} of a radial profile.
inline double quotient(const std::vector<double>& u, const StepPotential& h, const RadialGrid& grid,
                       const QuadratureSpec& spec = {}) {
    if (static_cast<int>(u.size()) != grid.m) throw validation_error("quotient: profile does not match grid");
    const AssembledForms forms = assemble_forms(h, grid, spec);
    const double p = critical_exponent(grid.n);
    double denom = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) denom += forms.mass[j] * std::pow(std::abs(u[j]), p);
    if (!(denom > 0.0)) throw validation_error("quotient: profile vanishes identically");
    return quadratic_form(forms, u, grid) / std::pow(denom, 2.0 / p);
}

/// Infimum of the quotient over positive radial profiles, by projected
/// gradient descent from several starts (constant, polar cap bumps, optional
/// seeded random starts). Reports the best final value; per-start outcomes
/// are kept so symmetry breaking stays visible.
inline YamabeResult minimize_quotient(const StepPotential& h, const YamabeOptions& opts = {}) {
    opts.validate();
    const RadialGrid grid = make_radial_grid(h.n, opts.grid_size, opts.quadrature);
    const AssembledForms forms = assemble_forms(h, grid, opts.quadrature);
    const detail::QuotientEvaluator eval(grid, forms);

    std::vector<std::pair<std::string, std::vector<double>>> starts;
    starts.emplace_back("constant", std::vector<double>(static_cast<std::size_t>(grid.m), 1.0));
    starts.emplace_back("south-bump", detail::bump_start(grid, true));
    starts.emplace_back("north-bump", detail::bump_start(grid, false));
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < opts.random_starts; ++k) {
        std::vector<double> u(static_cast<std::size_t>(grid.m));
        for (double& x : u) x = 0.1 + std::abs(gauss(rng));
        starts.emplace_back("random-" + std::to_string(k), std::move(u));
    }

    YamabeResult result{};
    bool have_best = false;
    for (auto& [label, u0] : starts) {
        detail::StartRun run = detail::minimize_from(std::move(u0), eval, opts);
        result.starts.push_back(StartOutcome{label, run.value, run.converged, run.iterations});
        if (!have_best || run.value < result.rho) {
            have_best = true;
            result.rho = run.value;
            result.minimizer = std::move(run.minimizer);
            result.iterations = run.iterations;
            result.converged = run.converged;
            result.start_label = label;
        }
    }

    result.el_residual = detail::stationarity_residual(forms, result.minimizer, result.rho,
                                                       critical_exponent(grid.n));
    return result;
}

/// Residual of the curved-exponent stationarity equation for a finished run,
/// in the same normalization minimize_quotient reports.
inline double euler_lagrange_residual(const YamabeResult& res, const StepPotential& h,
                                      const QuadratureSpec& spec = {}) {
    const int m = static_cast<int>(res.minimizer.size());
    const RadialGrid grid = make_radial_grid(h.n, m, spec);
    const AssembledForms forms = assemble_forms(h, grid, spec);
    return detail::stationarity_residual(forms, res.minimizer, res.rho, critical_exponent(h.n));
}

} // namespace conflap
