#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "conflap/sphere_geometry.hpp"

using namespace conflap;

TEST_CASE("sigma matches closed forms") {
    CHECK(sigma(Dim(2)) == Catch::Approx(2.0).epsilon(1e-13));
    CHECK(sigma(Dim(3)) == Catch::Approx(0.5 * pi).epsilon(1e-13));
    // antiderivative of sin^3 is cos^3/3 - cos, so the n = 4 value is 4/3
    CHECK(sigma(Dim(4)) == Catch::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(sigma(Dim(1)), validation_error);
}

TEST_CASE("sphere volumes through the recursion") {
    CHECK(sphere_volume(Dim(1)) == Catch::Approx(2.0 * pi).epsilon(1e-13));
    CHECK(sphere_volume(Dim(2)) == Catch::Approx(4.0 * pi).epsilon(1e-13));
    CHECK(sphere_volume(Dim(3)) == Catch::Approx(2.0 * pi * pi).epsilon(1e-13));
    CHECK(sphere_volume(Dim(5)) == Catch::Approx(pi * pi * pi).epsilon(1e-13));
    CHECK_THROWS_AS(Dim(0), validation_error);
}

TEST_CASE("cap volumes") {
    for (int n : {2, 3, 4, 5}) {
        const double total = sphere_volume(Dim(n));
        CHECK(cap_volume(Dim(n), Radius(pi)) == Catch::Approx(total).epsilon(1e-12));
        CHECK(cap_volume(Dim(n), Radius(0.5 * pi)) == Catch::Approx(0.5 * total).epsilon(1e-12));
    }
    // n = 2 closed form 2 pi (1 - cos r)
    const double r = pi / 3.0;
    CHECK(cap_volume(Dim(2), Radius(r)) == Catch::Approx(2.0 * pi * (1.0 - std::cos(r))).epsilon(1e-12));
    CHECK_THROWS_AS(Radius(-0.1), validation_error);
    CHECK_THROWS_AS(Radius(pi + 0.1), validation_error);
}

TEST_CASE("cap radius inverts the normalized cap volume") {
    CHECK(cap_radius_for_fraction(Dim(3), 0.0).r == 0.0);
    CHECK(cap_radius_for_fraction(Dim(3), 1.0).r == pi);
    CHECK(cap_radius_for_fraction(Dim(3), 0.5).r == Catch::Approx(0.5 * pi).margin(1e-11));
    CHECK_THROWS_AS(cap_radius_for_fraction(Dim(3), -0.01), validation_error);
    CHECK_THROWS_AS(cap_radius_for_fraction(Dim(3), 1.01), validation_error);

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> dim(2, 6);
    for (int i = 0; i < 1000; ++i) {
        const Dim n(dim(rng));
        const double s = unit(rng);
        const Radius r = cap_radius_for_fraction(n, s);
        CHECK(std::abs(cap_volume(n, r) / sphere_volume(n) - s) < 1e-10);
    }
}

TEST_CASE("antipodal caps tile the sphere") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, pi);
    for (int i = 0; i < 200; ++i) {
        const double r = dist(rng);
        for (int n : {2, 3, 4}) {
            const double total = sphere_volume(Dim(n));
            CHECK(cap_volume(Dim(n), Radius(r)) + cap_volume(Dim(n), Radius(pi - r)) ==
                  Catch::Approx(total).epsilon(1e-11));
        }
    }
}

TEST_CASE("isoperimetric profile of the model sphere") {
    CHECK(iso_profile(Dim(3), 0.0) == 0.0);
    CHECK(iso_profile(Dim(3), 1.0) == 0.0);
    CHECK(iso_profile(Dim(2), 0.5) == Catch::Approx(0.5).margin(1e-11));
    CHECK_THROWS_AS(iso_profile(Dim(2), 1.5), validation_error);

    // antipodal symmetry and a single maximum at s = 1/2
    for (int n : {2, 3, 5}) {
        const double peak = iso_profile(Dim(n), 0.5);
        for (int k = 1; k < 20; ++k) {
            const double s = k / 20.0;
            const double v = iso_profile(Dim(n), s);
            CHECK(v == Catch::Approx(iso_profile(Dim(n), 1.0 - s)).margin(1e-10));
            CHECK(v <= peak + 1e-10);
        }
    }
}

TEST_CASE("quadrature engine basics") {
    const double cubic = integrate([](double x) { return x * x * x; }, 0.0, 2.0);
    CHECK(cubic == Catch::Approx(4.0).epsilon(1e-14));
    const double osc = integrate([](double x) { return std::sin(10.0 * x); }, 0.0, pi);
    CHECK(osc == Catch::Approx((1.0 - std::cos(10.0 * pi)) / 10.0).margin(1e-12));
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
    QuadratureSpec bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, bad), validation_error);
}

TEST_CASE("conformal exponents") {
    CHECK(conformal_weight(Dim(3)) == Catch::Approx(8.0));
    CHECK(conformal_weight(Dim(4)) == Catch::Approx(6.0));
    CHECK(critical_exponent(Dim(3)) == Catch::Approx(6.0));
    CHECK(critical_exponent(Dim(4)) == Catch::Approx(4.0));
    CHECK(critical_exponent(Dim(6)) == Catch::Approx(3.0));
    CHECK_THROWS_AS(conformal_weight(Dim(2)), validation_error);
    CHECK_THROWS_AS(critical_exponent(Dim(2)), validation_error);
}
