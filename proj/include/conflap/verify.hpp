#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conflap/errors.hpp"
#include "conflap/radial_spectrum.hpp"
#include "conflap/rearrangement.hpp"
#include "conflap/sphere_geometry.hpp"
#include "conflap/step_potential.hpp"

namespace conflap {

/// Outcome of one randomized verification suite run.
struct SuiteResult {
    std::string suite;
    int count = 0;
    int failures = 0;
    std::vector<std::string> messages; // details for the first few failures

    bool passed() const { return failures == 0; }
};

namespace verify_detail {

inline void record_failure(SuiteResult& r, const std::string& msg) {
    ++r.failures;
    if (r.messages.size() < 5) r.messages.push_back(msg);
}

inline MeasuredFunction random_measured(std::mt19937_64& rng, double value_lo, double value_hi) {
    std::uniform_int_distribution<int> size_dist(1, 12);
    std::uniform_real_distribution<double> value_dist(value_lo, value_hi);
    std::uniform_real_distribution<double> weight_dist(0.05, 2.0);
    std::vector<Sample> samples(static_cast<std::size_t>(size_dist(rng)));
    for (Sample& s : samples) s = Sample{value_dist(rng), weight_dist(rng)};
    return make_measured(std::move(samples));
}

inline ManifoldSummary random_summary(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(3, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = n_dist(rng);
    const double d = 0.5 + 4.5 * unit(rng);
    const double volume = 0.5 + 29.5 * unit(rng);
    const double r0 = -3.0 + 6.0 * unit(rng);
    const auto side = [&](double& sup, double& l1) {
        sup = unit(rng) < 0.2 ? 0.0 : 0.1 + 9.9 * unit(rng);
        l1 = sup == 0.0 ? 0.0 : unit(rng) * volume * sup;
    };
    ScalarCurvatureStats sc{};
    side(sc.sup_plus, sc.l1_plus);
    side(sc.sup_minus, sc.l1_minus);
    return ManifoldSummary{Dim(n), d, volume, r0, sc};
}

inline StepPotential random_potential(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(3, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = n_dist(rng);
    const double c_plus = unit(rng) < 0.2 ? 0.0 : 20.0 * unit(rng);
    const double c_minus = unit(rng) < 0.2 ? 0.0 : 20.0 * unit(rng);
    return StepPotential{Dim(n), c_plus, Radius(pi * unit(rng)), c_minus, Radius(pi * unit(rng))};
}

} // namespace verify_detail

/// Power integrals are preserved by rearrangement, exactly in step
/// arithmetic: sum_i w_i f_i^q equals the step integral of f*^q.
inline SuiteResult verify_equimeasurability(std::uint64_t seed, int count) {
    SuiteResult result{"equimeasurability", count, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(3, 5);
    for (int i = 0; i < count; ++i) {
        const MeasuredFunction mf = verify_detail::random_measured(rng, 0.0, 5.0);
        const Dim n(n_dist(rng));
        const StepProfile dec = decreasing_rearrangement(mf);
        const StepProfile inc = increasing_rearrangement(mf);
        for (double q : {1.0, 2.0, critical_exponent(n)}) {
            double direct = 0.0;
            for (const Sample& s : mf.samples) direct += s.weight * std::pow(s.value, q);
            const double tol = 1e-12 * (1.0 + std::abs(direct));
            if (std::abs(power_integral(dec, q) - direct) > tol ||
                std::abs(power_integral(inc, q) - direct) > tol)
                verify_detail::record_failure(result, "instance " + std::to_string(i) + ", q = " +
                                                          std::to_string(q));
        }
    }
    return result;
}

/// lhs >= rhs for the rearranged curvature pairing.
inline SuiteResult verify_hlp(std::uint64_t seed, int count) {
    SuiteResult result{"hlp", count, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(3, 5);
    std::uniform_real_distribution<double> value_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> f_dist(0.0, 3.0);
    for (int i = 0; i < count; ++i) {
        MeasuredFunction f = verify_detail::random_measured(rng, 0.0, 3.0);
        MeasuredFunction curv = f;
        for (Sample& s : curv.samples) s.value = value_dist(rng);
        for (Sample& s : f.samples) s.value = f_dist(rng);
        const HlpBound b = hlp_lower_bound(curv, f, Dim(n_dist(rng)));
        if (!(b.lhs >= b.rhs - 1e-10 * (1.0 + std::abs(b.lhs))))
            verify_detail::record_failure(result, "instance " + std::to_string(i) + ": lhs " +
                                                      std::to_string(b.lhs) + " < rhs " +
                                                      std::to_string(b.rhs));
    }
    return result;
}

/// lower <= middle <= upper for random decreasing phi and psi in [0, 1].
inline SuiteResult verify_steffensen(std::uint64_t seed, int count) {
    SuiteResult result{"steffensen", count, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, 20);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        const int k = size_dist(rng);
        std::vector<double> t(static_cast<std::size_t>(k)), phi(t.size()), psi(t.size());
        double pos = unit(rng);
        double val = 10.0 * unit(rng) - 5.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            t[j] = pos;
            pos += 0.01 + unit(rng);
            phi[j] = val;
            val -= unit(rng);
            psi[j] = unit(rng);
        }
        const SteffensenBounds b = steffensen_bounds(t, phi, psi);
        const double tol = 1e-10 * (1.0 + std::abs(b.lower) + std::abs(b.middle) + std::abs(b.upper));
        if (!(b.lower <= b.middle + tol) || !(b.middle <= b.upper + tol))
            verify_detail::record_failure(result, "instance " + std::to_string(i));
    }
    return result;
}

/// The gamma bookkeeping matches the cap construction:
/// gamma+ = omega_n - vol B(S, r1) and gamma- = vol B(N, r2).
inline SuiteResult verify_gamma_link(std::uint64_t seed, int count) {
    SuiteResult result{"gamma-link", count, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const ManifoldSummary s = verify_detail::random_summary(rng);
        const GammaPair g = gamma_pair(s);
        const auto [r1, r2] = cap_radii(s);
        const double omega = sphere_volume(s.n);
        const double south = cap_volume(s.n, r1);
        const double north = cap_volume(s.n, r2);
        if (std::abs(g.gamma_plus - (omega - south)) > 1e-10 ||
            std::abs(g.gamma_minus - north) > 1e-10)
            verify_detail::record_failure(result, "instance " + std::to_string(i));
    }
    return result;
}

/// Adding a constant to the potential shifts the whole discrete spectrum by
/// exactly that constant (up to machine precision at this grid scale).
inline SuiteResult verify_shift_identity(std::uint64_t seed, int count) {
    SuiteResult result{"shift-identity", count, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> shift_dist(-10.0, 10.0);
    const int m = 200;
    for (int i = 0; i < count; ++i) {
        const StepPotential h = verify_detail::random_potential(rng);
        const double shift = shift_dist(rng);
        const RadialGrid grid = make_radial_grid(h.n, m);
        AssembledForms forms = assemble_forms(h, grid);

        double mean = 0.0;
        for (double p : forms.potential_integral) mean += p;
        mean /= forms.total_mass;
        const double base =
            detail::least_eigenvalue_of_forms(forms, std::min(-h.c_minus, mean), mean).value;

        for (std::size_t j = 0; j < forms.mass.size(); ++j)
            forms.stiffness.diag[j] += shift * forms.mass[j];
        const double lo = std::min(-h.c_minus, mean) + shift;
        const double shifted = detail::least_eigenvalue_of_forms(forms, lo, mean + shift).value;

        if (std::abs(shifted - (base + shift)) > 1e-9 * (1.0 + std::abs(shift)))
            verify_detail::record_failure(result, "instance " + std::to_string(i) + ": drift " +
                                                      std::to_string(shifted - base - shift));
    }
    return result;
}

inline SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed, int count) {
    if (count < 1) throw validation_error("verify: count must be positive");
    if (name == "equimeasurability") return verify_equimeasurability(seed, count);
    if (name == "hlp") return verify_hlp(seed, count);
    if (name == "steffensen") return verify_steffensen(seed, count);
    if (name == "gamma-link") return verify_gamma_link(seed, count);
    if (name == "shift-identity") return verify_shift_identity(seed, count);
    throw validation_error("verify: unknown suite '" + name + "'");
}

} // namespace conflap
