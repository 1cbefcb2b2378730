#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "conflap/rearrangement.hpp"
#include "conflap/step_potential.hpp"
#include "conflap/verify.hpp"

using namespace conflap;

TEST_CASE("decreasing rearrangement stacks atoms by value") {
    const MeasuredFunction constant = make_measured({{2.5, 3.0}});
    const StepProfile c = decreasing_rearrangement(constant);
    CHECK(c.values == std::vector<double>{2.5});
    CHECK(c.breakpoints == std::vector<double>{0.0, 3.0});

    const MeasuredFunction two = make_measured({{3.0, 1.0}, {1.0, 2.0}});
    const StepProfile p = decreasing_rearrangement(two);
    REQUIRE(p.values.size() == 2);
    CHECK(p.values[0] == 3.0);
    CHECK(p.values[1] == 1.0);
    CHECK(p.breakpoints == std::vector<double>{0.0, 1.0, 3.0});
    CHECK(p.eval(0.5) == 3.0);
    CHECK(p.eval(2.0) == 1.0);

    // idempotence: rearranging atoms that already sit in decreasing order
    const MeasuredFunction sorted = make_measured({{3.0, 1.0}, {1.0, 2.0}});
    const StepProfile again = decreasing_rearrangement(sorted);
    CHECK(again.values == p.values);
    CHECK(again.breakpoints == p.breakpoints);

    CHECK_THROWS_AS(decreasing_rearrangement(MeasuredFunction{{}, 0.0}), validation_error);
    CHECK_THROWS_AS(decreasing_rearrangement(MeasuredFunction{{{1.0, -1.0}}, -1.0}), validation_error);
}

TEST_CASE("increasing rearrangement mirrors the decreasing one") {
    const MeasuredFunction two = make_measured({{3.0, 1.0}, {1.0, 2.0}});
    const StepProfile inc = increasing_rearrangement(two);
    CHECK(inc.values == std::vector<double>{1.0, 3.0});
    CHECK(inc.breakpoints == std::vector<double>{0.0, 2.0, 3.0});

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<Sample> samples;
        const int k = 1 + static_cast<int>(unit(rng) * 8);
        for (int j = 0; j < k; ++j) samples.push_back({unit(rng) * 10.0 - 5.0, 0.1 + unit(rng)});
        const MeasuredFunction mf = make_measured(samples);
        const StepProfile inc2 = increasing_rearrangement(mf);
        const StepProfile dec2 = decreasing_rearrangement(mf);
        // reflection identity at continuity points
        for (int t = 1; t < 40; ++t) {
            const double u = mf.total_volume * t / 40.0 + 1e-9;
            if (u >= mf.total_volume) break;
            CHECK(inc2.eval(u) == dec2.eval(mf.total_volume - u));
        }
    }
}

TEST_CASE("power integrals on step profiles") {
    const MeasuredFunction constant = make_measured({{2.0, 3.0}});
    CHECK(power_integral(decreasing_rearrangement(constant), 2.0) == Catch::Approx(12.0));

    const MeasuredFunction two = make_measured({{3.0, 1.0}, {1.0, 2.0}});
    CHECK(power_integral(decreasing_rearrangement(two), 1.0) == Catch::Approx(5.0));

    StepProfile ones{{0.0, 4.0}, {1.0}};
    CHECK(power_integral(ones, 2.0 * 4 / (4 - 2)) == Catch::Approx(4.0));

    StepProfile negative{{0.0, 1.0}, {-2.0}};
    CHECK(power_integral(negative, 3.0) == Catch::Approx(-8.0));
    CHECK_THROWS_AS(power_integral(negative, 2.5), validation_error);
    CHECK_THROWS_AS(power_integral(ones, 0.5), validation_error);
}

TEST_CASE("curvature pairing bound: equality cases") {
    // f == 1: both sides reduce to the integral of R
    const std::vector<double> weights{0.7, 1.3, 0.5, 2.0};
    std::vector<Sample> r_atoms, f_atoms;
    const std::vector<double> r_values{3.0, -1.0, 0.5, -2.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        r_atoms.push_back({r_values[i], weights[i]});
        f_atoms.push_back({1.0, weights[i]});
    }
    const HlpBound b = hlp_lower_bound(make_measured(r_atoms), make_measured(f_atoms), Dim(3));
    double integral = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) integral += weights[i] * r_values[i];
    CHECK(b.lhs == Catch::Approx(integral).margin(1e-12));
    CHECK(b.rhs == Catch::Approx(integral).margin(1e-12));

    // constant R: equality for every f
    std::vector<Sample> rc, fv;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        rc.push_back({4.0, weights[i]});
        fv.push_back({static_cast<double>(i), weights[i]});
    }
    const HlpBound bc = hlp_lower_bound(make_measured(rc), make_measured(fv), Dim(4));
    CHECK(bc.lhs == Catch::Approx(bc.rhs).margin(1e-10));
}

TEST_CASE("curvature pairing bound: brute-force pairing oracle") {
    // With equal weights, measure-preserving pairings are permutations, and
    // the rearranged pairing must be the minimal one.
    const std::array<double, 4> r_values{2.0, -3.0, 0.5, 1.5};
    const std::array<double, 4> f_values{0.2, 1.7, 0.9, 2.4};
    std::vector<Sample> r_atoms, f_atoms;
    for (int i = 0; i < 4; ++i) {
        r_atoms.push_back({r_values[i], 1.0});
        f_atoms.push_back({f_values[i], 1.0});
    }
    const HlpBound b = hlp_lower_bound(make_measured(r_atoms), make_measured(f_atoms), Dim(3));

    std::array<int, 4> perm{0, 1, 2, 3};
    double best = 1e300;
    do {
        double pairing = 0.0;
        for (int i = 0; i < 4; ++i) pairing += r_values[perm[i]] * f_values[i] * f_values[i];
        best = std::min(best, pairing);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(b.rhs == Catch::Approx(best).margin(1e-12));
    CHECK(b.lhs >= b.rhs - 1e-12);

    std::vector<Sample> mismatched = r_atoms;
    mismatched[0].weight = 2.0;
    CHECK_THROWS_AS(hlp_lower_bound(MeasuredFunction{mismatched, 5.0}, make_measured(f_atoms), Dim(3)),
                    validation_error);
}

TEST_CASE("steffensen bounds: closed forms") {
    // phi = 1 - t and psi = 1/2 on (0, 1)
    std::vector<double> t, phi, half, one, zero;
    for (int i = 0; i <= 10; ++i) {
        t.push_back(i / 10.0);
        phi.push_back(1.0 - i / 10.0);
        half.push_back(0.5);
        one.push_back(1.0);
        zero.push_back(0.0);
    }
    const SteffensenBounds b = steffensen_bounds(t, phi, half);
    CHECK(b.gamma == Catch::Approx(0.5).margin(1e-14));
    CHECK(b.lower == Catch::Approx(1.0 / 8.0).margin(1e-13));
    CHECK(b.middle == Catch::Approx(1.0 / 4.0).margin(1e-13));
    CHECK(b.upper == Catch::Approx(3.0 / 8.0).margin(1e-13));

    const SteffensenBounds all = steffensen_bounds(t, phi, one);
    CHECK(all.gamma == Catch::Approx(1.0));
    CHECK(all.lower == Catch::Approx(0.5).margin(1e-13));
    CHECK(all.middle == Catch::Approx(0.5).margin(1e-13));
    CHECK(all.upper == Catch::Approx(0.5).margin(1e-13));

    const SteffensenBounds none = steffensen_bounds(t, phi, zero);
    CHECK(none.gamma == 0.0);
    CHECK(none.lower == Catch::Approx(0.0).margin(1e-14));
    CHECK(none.middle == Catch::Approx(0.0).margin(1e-14));
    CHECK(none.upper == Catch::Approx(0.0).margin(1e-14));

    std::vector<double> rising = phi;
    std::reverse(rising.begin(), rising.end());
    CHECK_THROWS_AS(steffensen_bounds(t, rising, half), validation_error);
    std::vector<double> out_of_range = half;
    out_of_range[3] = 1.5;
    CHECK_THROWS_AS(steffensen_bounds(t, phi, out_of_range), validation_error);
}

TEST_CASE("gamma pair conventions") {
    const double v3 = 2.0 * pi * pi;
    const double omega = sphere_volume(Dim(3));
    const ManifoldSummary sphere{Dim(3), pi, v3, 2.0, {6.0, 0.0, 6.0 * v3, 0.0}};
    const GammaPair gs = gamma_pair(sphere);
    CHECK(gs.gamma_plus == Catch::Approx(0.0).margin(1e-10));
    CHECK(gs.gamma_minus == 0.0);

    const ManifoldSummary negative{Dim(3), 1.0, 2.0, 0.0, {0.0, 3.0, 0.0, 6.0}};
    const GammaPair gn = gamma_pair(negative);
    CHECK(gn.gamma_plus == omega);
    CHECK(gn.gamma_minus == Catch::Approx(omega).margin(1e-10));

    const ManifoldSummary flat{Dim(3), 1.0, 1.0, 0.0, {}};
    const GammaPair gf = gamma_pair(flat);
    CHECK(gf.gamma_plus == omega);
    CHECK(gf.gamma_minus == 0.0);
}

TEST_CASE("projection onto the sphere") {
    const Dim n(3);
    const StepProfile constant{{0.0, 5.0}, {2.0}};
    const RadialProfile rc = project_to_sphere(constant, n);
    CHECK(rc.eval(0.3) == 2.0);
    CHECK(rc.eval(3.0) == 2.0);

    // indicator of half the volume becomes the hemisphere indicator
    const StepProfile half{{0.0, 2.5, 5.0}, {1.0, 0.0}};
    const RadialProfile rh = project_to_sphere(half, n);
    REQUIRE(rh.radii.size() == 3);
    CHECK(rh.radii[1] == Catch::Approx(0.5 * pi).margin(1e-11));

    // two-step profile with first step holding one third of the volume
    const StepProfile third{{0.0, 1.0, 3.0}, {3.0, 1.0}};
    const RadialProfile rt = project_to_sphere(third, n);
    CHECK(rt.radii[1] == Catch::Approx(cap_radius_for_fraction(n, 1.0 / 3.0).r).margin(1e-11));

    // q-integrals transported with the omega_n/V factor
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<Sample> atoms;
        const int k = 1 + static_cast<int>(unit(rng) * 6);
        for (int j = 0; j < k; ++j) atoms.push_back({unit(rng) * 4.0, 0.2 + unit(rng)});
        const MeasuredFunction mf = make_measured(atoms);
        const StepProfile dec = decreasing_rearrangement(mf);
        const RadialProfile radial = project_to_sphere(dec, n);
        for (double q : {1.0, 2.0, 6.0}) {
            const double sphere_integral = radial_power_integral(radial, q);
            const double measure_integral = power_integral(dec, q);
            CHECK(sphere_integral == Catch::Approx(sphere_volume(n) / mf.total_volume * measure_integral)
                                         .epsilon(1e-9));
        }
    }
}

TEST_CASE("randomized suites stay green on fresh seeds") {
    CHECK(verify_equimeasurability(321, 300).passed());
    CHECK(verify_hlp(322, 300).passed());
    CHECK(verify_steffensen(323, 300).passed());
    CHECK(verify_gamma_link(324, 60).passed());
}
