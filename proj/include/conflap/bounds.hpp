#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/isoperimetric_constant.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/radial_spectrum.hpp"
#include "conflap/step_potential.hpp"
#include "conflap/yamabe.hpp"

namespace conflap {

enum class RigidityVerdict { conformal_sphere, inconclusive, not_applicable };

inline std::string_view to_string(RigidityVerdict v) {
    switch (v) {
    case RigidityVerdict::conformal_sphere: return "conformal-sphere";
    case RigidityVerdict::inconclusive: return "inconclusive";
    default: return "not-applicable";
    }
}

struct BoundsOptions {
    int grid_size = 1000;
    YamabeOptions yamabe{};
    double decision_rel_tol = 1e-3; // rigidity margin, relative to lambda(S^n)
    QuadratureSpec quadrature{};
};

/// Everything the pipeline produces for one summary: the comparison constant,
/// the model potential's cap radii, both spectral quantities, the assembled
/// eigenvalue and Yamabe lower bounds, and the rigidity verdict.
struct BoundsReport {
    ManifoldSummary summary;
    Hypothesis hypothesis;
    double a;
    double a_over_d_sq; // (a/d)^2
    double beta;        // V / omega_n
    double r1;
    double r2;
    double rho1;
    double rho;
    bool rho_converged;
    double mu1_lower_bound;    // (a/d)^2 * rho1
    double lambda_lower_bound; // (a/d)^2 * beta^{2/n} * rho
    double lambda_sphere;      // n(n-1) * omega_n^{2/n}
    RigidityVerdict rigidity;
    std::vector<std::string> caveats;
};

inline BoundsReport compute_bounds(const ManifoldSummary& summary, const BoundsOptions& opts = {}) {
    validate(summary);
    BoundsReport rep{summary, Hypothesis{0, 0.0}, 0, 0, 0, 0, 0, 0, 0, false, 0, 0, 0,
                     RigidityVerdict::not_applicable, {}};

    const BbgConstant constant = best_hypothesis(summary, opts.quadrature);
    rep.hypothesis = constant.hypothesis;
    rep.a = constant.value;
    rep.a_over_d_sq = (constant.value / summary.diameter) * (constant.value / summary.diameter);
    rep.beta = summary.beta(opts.quadrature);

    const StepPotential h = build_potential(summary, constant, opts.quadrature);
    rep.r1 = h.r1.r;
    rep.r2 = h.r2.r;

    const SpectralResult spectral = least_eigenvalue(h, opts.grid_size, opts.quadrature);
    rep.rho1 = spectral.rho1;
    rep.mu1_lower_bound = rep.a_over_d_sq * rep.rho1;

    YamabeOptions yopts = opts.yamabe;
    yopts.grid_size = opts.grid_size;
    const YamabeResult yam = minimize_quotient(h, yopts);
    rep.rho = yam.rho;
    rep.rho_converged = yam.converged;
    const double n = static_cast<double>(summary.n.n);
    rep.lambda_lower_bound = rep.a_over_d_sq * std::pow(rep.beta, 2.0 / n) * rep.rho;
    rep.lambda_sphere = n * (n - 1.0) * std::pow(sphere_volume(summary.n, opts.quadrature), 2.0 / n);

    rep.caveats.push_back("rho is the infimum over radial profiles; it upper-bounds the "
                          "unrestricted infimum, so the lambda bound may overstate");
    if (!yam.converged)
        rep.caveats.push_back("yamabe minimization did not converge; rho is the best iterate");

    // Rigidity needs positive Ricci (an epsilon = 1 hypothesis) and R- = 0,
    // and never fires off a non-converged minimization.
    if (!(summary.ricci_lower > 0.0)) {
        rep.caveats.push_back("rigidity not applicable: no positive-epsilon hypothesis");
    } else if (summary.scalar.sup_minus != 0.0 || summary.scalar.l1_minus != 0.0) {
        rep.caveats.push_back("rigidity not applicable: scalar curvature has a negative part, "
                              "which positive Ricci rules out for the test");
    } else if (!yam.converged) {
        rep.rigidity = RigidityVerdict::inconclusive;
        rep.caveats.push_back("rigidity inconclusive: minimization did not converge");
    } else {
        const double threshold = rep.lambda_sphere * (1.0 - opts.decision_rel_tol);
        rep.rigidity = rep.lambda_lower_bound >= threshold ? RigidityVerdict::conformal_sphere
                                                           : RigidityVerdict::inconclusive;
    }
    return rep;
}

/// (a/d)^2 * rho1, the lower bound for the least eigenvalue of the conformal
/// Laplacian of (M, g).
inline double mu1_lower_bound(const ManifoldSummary& summary, int grid_size,
                              const QuadratureSpec& spec = {}) {
    validate(summary);
    const BbgConstant constant = best_hypothesis(summary, spec);
    const StepPotential h = build_potential(summary, constant, spec);
    const SpectralResult spectral = least_eigenvalue(h, grid_size, spec);
    const double ratio = constant.value / summary.diameter;
    return ratio * ratio * spectral.rho1;
}

/// (a/d)^2 * beta^{2/n} * rho, the lower bound for the Yamabe invariant.
inline double lambda_lower_bound(const ManifoldSummary& summary, const BoundsOptions& opts = {}) {
    return compute_bounds(summary, opts).lambda_lower_bound;
}

inline RigidityVerdict rigidity_test(const ManifoldSummary& summary, const BoundsOptions& opts = {}) {
    return compute_bounds(summary, opts).rigidity;
}

/// Closed-form bounds under Ric >= n-1: mu1 >= n(n-1) and
/// lambda >= n(n-1) V^{2/n}. No solve involved.
inline std::pair<double, double> corollary_bounds(const ManifoldSummary& summary) {
    validate(summary);
    const double n = static_cast<double>(summary.n.n);
    if (!(summary.ricci_lower >= n - 1.0))
        throw validation_error("corollary_bounds: requires Ricci lower bound >= n-1");
    const double mu = n * (n - 1.0);
    return {mu, mu * std::pow(summary.volume, 2.0 / n)};
}

} // namespace conflap
