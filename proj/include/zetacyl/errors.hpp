#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetacyl {

// Evaluation requested at a pole of the function.
struct PoleError : std::domain_error {
    explicit PoleError(std::complex<double> where)
        : std::domain_error("pole at s = (" + std::to_string(where.real()) + ", " +
                            std::to_string(where.imag()) + ")"),
          location(where) {}
    std::complex<double> location;
};

// Spectrum entry with lambda <= 0; the tangential operator must be invertible.
struct NonPositiveEigenvalue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Materialized spectrum too short to meet the requested tail bound.
struct TruncationInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Analytic continuation not available at this point for this spectrum type.
struct ContinuationUnavailable : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutsideConvergenceStrip : std::domain_error {
    using std::domain_error::domain_error;
};

// Sign-change bracketing failed after the allowed grid refinements.
struct BracketingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary condition pair with no validated closed-form determinant.
struct UnsupportedBC : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    ConfigError(int line_no, const std::string& field, const std::string& what_arg)
        : std::runtime_error("config line " + std::to_string(line_no) + ", field '" + field +
                             "': " + what_arg),
          line(line_no), field_name(field) {}
    int line;
    std::string field_name;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetacyl
