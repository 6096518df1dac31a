#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lasvegas {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distribution or solver parameters violate their invariants.
class invalid_parameters : public error {
public:
    using error::error;
};

/// A sample is too small or too uniform for the requested estimator.
class degenerate_sample : public error {
public:
    using error::error;
};

/// A sample is below the minimum size required by a statistical test.
class undersized_sample : public error {
public:
    using error::error;
};

/// Malformed or unreadable input data (CSV/JSON files).
class data_error : public error {
public:
    using error::error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class quadrature_error : public error {
public:
    quadrature_error(const std::string& what, double requested, double achieved)
        : error(what), requested_tolerance(requested), achieved_error_bound(achieved) {}

    double requested_tolerance;
    double achieved_error_bound;
};

/// Core-count lists of two pipeline stages do not match.
class join_error : public data_error {
public:
    join_error(const std::string& what, std::vector<int> missing)
        : data_error(what), missing_cores(std::move(missing)) {}

    std::vector<int> missing_cores;
};

}  // namespace lasvegas
