#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tricircle {

inline constexpr const char* kVersion = "0.1.0";

// Default tolerance for geometric comparisons. Comparisons are relative when
// the reference is nonzero, absolute otherwise.
inline constexpr double kGeomTol = 1e-9;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what_arg),
          line(line_no) {}
    std::size_t line;
};

/// |value - reference| as relative error when reference != 0, absolute otherwise.
inline double deviation(double value, double reference) {
    const double diff = std::fabs(value - reference);
    return reference != 0.0 ? diff / std::fabs(reference) : diff;
}

inline bool close(double value, double reference, double tol = kGeomTol) {
    return deviation(value, reference) <= tol;
}

inline void require_positive_finite(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw DomainError(std::string(name) + " must be positive and finite");
}

}  // namespace tricircle
