#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conflap/manifold_summary.hpp"
#include "conflap/sphere_geometry.hpp"

namespace conflap {

struct CatalogEntry {
    std::string name;
    ManifoldSummary summary;
    std::optional<double> known_lambda; // reference value where one is known
    std::string note;
};

namespace detail {

inline ManifoldSummary round_sphere(int n, double radius) {
    const double scalar = n * (n - 1.0) / (radius * radius);
    const double volume = std::pow(radius, n) * sphere_volume(Dim(n));
    return ManifoldSummary{Dim(n), radius * pi, volume, (n - 1.0) / (radius * radius),
                           ScalarCurvatureStats{scalar, 0.0, scalar * volume, 0.0}};
}

} // namespace detail

/// Built-in reference summaries: round spheres (unit and rescaled), the flat
/// torus, and the S^2 x S^2 product as a negative control.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> list;
        for (int n : {3, 4, 5}) {
            const double lam = n * (n - 1.0) * std::pow(sphere_volume(Dim(n)), 2.0 / n);
            list.push_back({"S" + std::to_string(n) + "-round", detail::round_sphere(n, 1.0), lam,
                            "unit round sphere; invariant n(n-1) omega_n^{2/n}"});
        }
        {
            const double lam = 6.0 * std::pow(sphere_volume(Dim(3)), 2.0 / 3.0);
            list.push_back({"S3-radius-2", detail::round_sphere(3, 2.0), lam,
                            "round sphere of radius 2; same conformal class as S3-round"});
        }
        list.push_back({"T3-flat",
                        ManifoldSummary{Dim(3), 1.0, 1.0, 0.0, ScalarCurvatureStats{0, 0, 0, 0}},
                        0.0, "flat torus, unit diameter and volume; scalar-flat conformal class"});
        {
            const double v = 16.0 * pi * pi; // (4 pi)^2
            list.push_back({"S2xS2",
                            ManifoldSummary{Dim(4), pi * std::sqrt(2.0), v, 1.0,
                                            ScalarCurvatureStats{4.0, 0.0, 4.0 * v, 0.0}},
                            std::nullopt, "product of unit 2-spheres; not conformally spherical"});
        }
        return list;
    }();
    return entries;
}

inline const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace conflap
