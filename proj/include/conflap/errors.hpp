#pragma once

#include <stdexcept>
#include <string>

namespace conflap {

// Invalid input data: bad dimensions, inconsistent curvature statistics,
// out-of-range arguments.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine could not produce a trustworthy answer (no bracket,
// iteration budget exhausted, residual too large). Never silently defaulted.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace conflap
