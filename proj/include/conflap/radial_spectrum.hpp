#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/radial_grid.hpp"
#include "conflap/step_potential.hpp"
#include "conflap/tridiagonal.hpp"

namespace conflap {

/// Discrete quadratic forms of the radial operator c_n*Lap + h on S^n:
///   Q(u) = sum_f c_n w_face (u_{j+1}-u_j)^2 / h  +  sum_j (int_cell h dmu) u_j^2
///   M(u) = sum_j w_j u_j^2
/// No boundary rows: the face weight vanishing at the poles is the natural
/// regularity condition.
struct AssembledForms {
    SymTridiagonal stiffness;
    std::vector<double> mass;
    std::vector<double> potential_integral; // int_{cell j} h dmu
    double total_mass;
};

inline AssembledForms assemble_forms(const StepPotential& h, const RadialGrid& grid,
                                     const QuadratureSpec& spec = {}) {
    if (h.n.n != grid.n.n) throw validation_error("assemble_forms: dimension mismatch");
    validate(h);
    const double cn = conformal_weight(grid.n);
    const std::size_t m = static_cast<std::size_t>(grid.m);
    AssembledForms forms;
    forms.potential_integral = potential_cell_integrals(h, grid, spec);
    forms.mass = grid.cell_measure;
    forms.total_mass = grid.total_measure;
    forms.stiffness.diag.assign(m, 0.0);
    forms.stiffness.off.assign(m - 1, 0.0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const double k = cn * grid.face_weight[j] / grid.h;
        forms.stiffness.diag[j] += k;
        forms.stiffness.diag[j + 1] += k;
        forms.stiffness.off[j] = -k;
    }
    for (std::size_t j = 0; j < m; ++j) forms.stiffness.diag[j] += forms.potential_integral[j];
    return forms;
}

/// Q(u), evaluated as the sum of the two form pieces. Constants give an
/// exact zero stiffness contribution.
inline double quadratic_form(const AssembledForms& f, const std::vector<double>& u,
                             const RadialGrid& grid) {
    const double cn = conformal_weight(grid.n);
    double q = 0.0;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
        const double d = u[j + 1] - u[j];
        q += cn * grid.face_weight[j] * d * d / grid.h;
    }
    for (std::size_t j = 0; j < u.size(); ++j) q += f.potential_integral[j] * u[j] * u[j];
    return q;
}

inline double mass_form(const AssembledForms& f, const std::vector<double>& u) {
    double m = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) m += f.mass[j] * u[j] * u[j];
    return m;
}

namespace detail {

// Congruence to a standard symmetric tridiagonal problem through the
// diagonal mass: A = M^{-1/2} K M^{-1/2}.
inline SymTridiagonal standard_form(const AssembledForms& f) {
    const std::size_t m = f.mass.size();
    SymTridiagonal a;
    a.diag.resize(m);
    a.off.resize(m - 1);
    for (std::size_t j = 0; j < m; ++j) a.diag[j] = f.stiffness.diag[j] / f.mass[j];
    for (std::size_t j = 0; j + 1 < m; ++j)
        a.off[j] = f.stiffness.off[j] / std::sqrt(f.mass[j] * f.mass[j + 1]);
    return a;
}

} // namespace detail

/// Least eigenvalue with eigenfunction at cell centers, normalized to unit
/// discrete L^2(w) norm and positive.
struct SpectralResult {
    double rho1;
    std::vector<double> eigenfunction;
    double residual_norm; // ||A v - rho1 v||_2 in the mass-normalized frame
    RadialGrid grid;
};

namespace detail {

inline void orient_positive(std::vector<double>& v) {
    double extreme = 0.0;
    for (double x : v)
        if (std::abs(x) > std::abs(extreme)) extreme = x;
    if (extreme < 0.0)
        for (double& x : v) x = -x;
}

struct GeneralizedPair {
    double value;
    std::vector<double> vector; // mass-normalized frame, unit norm
    double residual;
};

// lo/hi are certified two-sided bounds for the least eigenvalue when finite.
inline GeneralizedPair least_eigenvalue_of_forms(const AssembledForms& f, double lo, double hi) {
    const SymTridiagonal a = detail::standard_form(f);
    if (lo == hi) {
        // Collapsed bracket: the value is known exactly, the ground state is
        // the constant function (zero potential everywhere).
        const std::size_t m = a.size();
        std::vector<double> v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = std::sqrt(f.mass[j]);
        const double nrm = tridiag::norm2(v);
        for (double& x : v) x /= nrm;
        const double value = hi; // +0.0 rather than -0.0 when the bracket is [0, 0]
        const std::vector<double> av = tridiag::matvec(a, v);
        double resid = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double r = av[j] - value * v[j];
            resid += r * r;
        }
        return GeneralizedPair{value, std::move(v), std::sqrt(resid)};
    }
    const double pad_lo = lo - 1e-9 * (1.0 + std::abs(lo));
    const double pad_hi = hi + 1e-9 * (1.0 + std::abs(hi));
    const double value = tridiag::eigenvalue_k(a, 0, 1e-10, &pad_lo, &pad_hi);
    tridiag::EigenPair pair = tridiag::refine_eigenpair(a, value);
    detail::orient_positive(pair.vector);
    const double tol = 1e-10 * std::max(1.0, tridiag::inf_norm(a));
    if (pair.residual > tol)
        throw solver_error("least_eigenvalue: residual exceeds solver tolerance");
    return GeneralizedPair{pair.value, std::move(pair.vector), pair.residual};
}

} // namespace detail

inline SpectralResult least_eigenvalue(const StepPotential& h, int m, const QuadratureSpec& spec = {}) {
    RadialGrid grid = make_radial_grid(h.n, m, spec);
    const AssembledForms forms = assemble_forms(h, grid, spec);

    // Two-sided bracket: h >= -c_minus pointwise, and the constant function
    // gives the Rayleigh quotient mean(h).
    double mean_h = 0.0;
    for (double p : forms.potential_integral) mean_h += p;
    mean_h /= forms.total_mass;
    const double lo = std::min(-h.c_minus, mean_h);

    detail::GeneralizedPair pair = detail::least_eigenvalue_of_forms(forms, lo, mean_h);

    std::vector<double> u(pair.vector.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = pair.vector[j] / std::sqrt(forms.mass[j]);
    double low = u[0];
    for (double x : u) low = std::min(low, x);
    if (!(low > 0.0)) throw solver_error("least_eigenvalue: ground state not positive");
    return SpectralResult{pair.value, std::move(u), pair.residual, std::move(grid)};
}

/// Lowest `count` eigenvalues of the radial operator, increasing.
inline std::vector<double> radial_spectrum(const StepPotential& h, int count, int m,
                                           const QuadratureSpec& spec = {}) {
    if (count < 1) throw validation_error("radial_spectrum: count must be at least 1");
    if (count > m) throw validation_error("radial_spectrum: count exceeds grid size");
    const RadialGrid grid = make_radial_grid(h.n, m, spec);
    const AssembledForms forms = assemble_forms(h, grid, spec);
    const SymTridiagonal a = detail::standard_form(forms);
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) values[static_cast<std::size_t>(k)] = tridiag::eigenvalue_k(a, k);
    return values;
}

} // namespace conflap
