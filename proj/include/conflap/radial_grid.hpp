#pragma once

#include <cmath>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/quadrature.hpp"
#include "conflap/sphere_geometry.hpp"
#include "conflap/step_potential.hpp"

namespace conflap {

/// Cell-centered grid for radial integrands on S^n. Cell j covers
/// [j*h, (j+1)*h] with h = pi/m; the half-cell offset keeps evaluation away
/// from the poles, where the sin^{n-1} weight vanishes and imposes the
/// natural (regular) boundary behaviour by itself.
struct RadialGrid {
    Dim n;
    int m;
    double h;
    std::vector<double> center;       // r_j, size m
    std::vector<double> cell_measure; // w_j = omega_{n-1} * int_cell sin^{n-1}, size m
    std::vector<double> face_weight;  // omega_{n-1} * sin^{n-1} at interior faces, size m-1
    double total_measure;             // sum of w_j, approximates omega_n
};

namespace detail {

// One fixed-order panel suffices: cells are narrow and sin^{n-1} is entire.
inline double weight_band(Dim n, double lo, double hi, double omega_nm1) {
    const double k = static_cast<double>(n.n - 1);
    return omega_nm1 * gauss16_panel([k](double t) { return std::pow(std::sin(t), k); }, lo, hi);
}

} // namespace detail

inline RadialGrid make_radial_grid(Dim n, int m, const QuadratureSpec& spec = {}) {
    if (n.n < 2) throw validation_error("make_radial_grid: requires n >= 2");
    if (m < 16) throw validation_error("make_radial_grid: need at least 16 cells");
    RadialGrid g{n, m, pi / m, {}, {}, {}, 0.0};
    const double omega_nm1 = sphere_volume(Dim(n.n - 1), spec);
    const double k = static_cast<double>(n.n - 1);
    g.center.resize(m);
    g.cell_measure.resize(m);
    g.face_weight.resize(m - 1);
    for (int j = 0; j < m; ++j) {
        g.center[j] = (j + 0.5) * g.h;
        g.cell_measure[j] = detail::weight_band(n, j * g.h, (j + 1) * g.h, omega_nm1);
        g.total_measure += g.cell_measure[j];
    }
    for (int j = 0; j + 1 < m; ++j)
        g.face_weight[j] = omega_nm1 * std::pow(std::sin((j + 1) * g.h), k);
    return g;
}

/// Exact cell integrals of the step potential against the cell measure:
/// returns the vector of int_{cell j} h dmu. Assigning cells the exact
/// average instead of the midpoint value keeps the discretization accurate
/// across the cap boundaries.
inline std::vector<double> potential_cell_integrals(const StepPotential& h, const RadialGrid& g,
                                                    const QuadratureSpec& spec = {}) {
    if (h.n.n != g.n.n) throw validation_error("potential_cell_integrals: dimension mismatch");
    const double omega_nm1 = sphere_volume(Dim(g.n.n - 1), spec);
    std::vector<double> out(static_cast<std::size_t>(g.m), 0.0);
    const double south_lo = pi - h.r1.r;
    for (int j = 0; j < g.m; ++j) {
        const double a = j * g.h;
        const double b = (j + 1) * g.h;
        if (h.c_plus != 0.0 && h.r1.r > 0.0) {
            const double lo = std::max(a, south_lo);
            if (b > lo) out[j] += h.c_plus * detail::weight_band(g.n, lo, b, omega_nm1);
        }
        if (h.c_minus != 0.0 && h.r2.r > 0.0) {
            const double hi = std::min(b, h.r2.r);
            if (hi > a) out[j] -= h.c_minus * detail::weight_band(g.n, a, hi, omega_nm1);
        }
    }
    return out;
}

} // namespace conflap
