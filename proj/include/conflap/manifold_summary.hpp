#pragma once

#include <cmath>

#include "conflap/errors.hpp"
#include "conflap/sphere_geometry.hpp"

namespace conflap {

/// Scalar-curvature summary of (M, g): pointwise suprema and L1 masses of the
/// positive and negative parts R+ and R-.
struct ScalarCurvatureStats {
    double sup_plus = 0.0;
    double sup_minus = 0.0;
    double l1_plus = 0.0;
    double l1_minus = 0.0;
};

/// All the artifact ever learns about a closed manifold (M, g): dimension,
/// diameter, volume, a Ricci lower bound, and scalar-curvature statistics.
struct ManifoldSummary {
    Dim n;
    double diameter;
    double volume;
    double ricci_lower; // least eigenvalue of Ric over unit tangent vectors
    ScalarCurvatureStats scalar;

    double beta(const QuadratureSpec& spec = {}) const { return volume / sphere_volume(n, spec); }
};

// l1 <= V*sup gets a relative grace factor so that summaries built from exact
// products (l1 = sup * V) survive rounding of either side.
inline void validate(const ManifoldSummary& s) {
    if (s.n.n < 3) throw validation_error("ManifoldSummary: dimension must be at least 3");
    if (!(s.diameter > 0.0)) throw validation_error("ManifoldSummary: diameter must be positive");
    if (!(s.volume > 0.0)) throw validation_error("ManifoldSummary: volume must be positive");
    if (!std::isfinite(s.ricci_lower)) throw validation_error("ManifoldSummary: Ricci bound must be finite");
    const auto check_side = [&](double sup, double l1, const char* side) {
        if (!(sup >= 0.0) || !(l1 >= 0.0))
            throw validation_error(std::string("ManifoldSummary: scalar stats must be nonnegative (") + side + ")");
        if (sup == 0.0 && l1 != 0.0)
            throw validation_error(std::string("ManifoldSummary: sup = 0 forces l1 = 0 (") + side + ")");
        if (l1 > s.volume * sup * (1.0 + 1e-12))
            throw validation_error(std::string("ManifoldSummary: l1 exceeds volume * sup (") + side + ")");
    };
    check_side(s.scalar.sup_plus, s.scalar.l1_plus, "plus");
    check_side(s.scalar.sup_minus, s.scalar.l1_minus, "minus");
}

} // namespace conflap
