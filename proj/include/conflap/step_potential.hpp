#pragma once

#include <cmath>
#include <utility>

#include "conflap/errors.hpp"
#include "conflap/isoperimetric_constant.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/sphere_geometry.hpp"

namespace conflap {

/// Radial step potential h = h+ - h- on S^n. h+ is c_plus on the south cap
/// {r >= pi - r1}, h- is c_minus on the north cap {r <= r2}; r is geodesic
/// distance from the north pole. Caps may overlap, the heights subtract.
struct StepPotential {
    Dim n;
    double c_plus;
    Radius r1;
    double c_minus;
    Radius r2;
};

inline void validate(const StepPotential& h) {
    if (h.n.n < 3) throw validation_error("StepPotential: dimension must be at least 3");
    if (!(h.c_plus >= 0.0) || !(h.c_minus >= 0.0))
        throw validation_error("StepPotential: heights must be nonnegative");
}

/// Cap radii from the L1/sup mass fractions of R+ and R-:
///   omega_n^{-1} vol B(S, r1) = ||R+||_1 / (V sup R+),  same for r2 with R-.
/// Empty support (sup = 0) gives radius 0.
inline std::pair<Radius, Radius> cap_radii(const ManifoldSummary& s, const QuadratureSpec& spec = {}) {
    validate(s);
    const auto radius_for = [&](double sup, double l1) {
        if (sup == 0.0) return Radius(0.0);
        const double fraction = std::min(1.0, l1 / (s.volume * sup));
        return cap_radius_for_fraction(s.n, fraction, spec);
    };
    return {radius_for(s.scalar.sup_plus, s.scalar.l1_plus),
            radius_for(s.scalar.sup_minus, s.scalar.l1_minus)};
}

/// Model potential for a summary under a comparison constant a: heights
/// (d/a)^2 sup R+-, radii from cap_radii.
inline StepPotential build_potential(const ManifoldSummary& s, const BbgConstant& a,
                                     const QuadratureSpec& spec = {}) {
    validate(s);
    if (!(a.value > 0.0)) throw validation_error("build_potential: comparison constant must be positive");
    const double scale = (s.diameter / a.value) * (s.diameter / a.value);
    const auto [r1, r2] = cap_radii(s, spec);
    return StepPotential{s.n, scale * s.scalar.sup_plus, r1, scale * s.scalar.sup_minus, r2};
}

/// Point evaluation with closed-cap indicator convention.
inline double eval_potential(const StepPotential& h, Radius r) {
    double value = 0.0;
    if (h.r1.r > 0.0 && r.r >= pi - h.r1.r) value += h.c_plus;
    if (h.r2.r > 0.0 && r.r <= h.r2.r) value -= h.c_minus;
    return value;
}

} // namespace conflap
