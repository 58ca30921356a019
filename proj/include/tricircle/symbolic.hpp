#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tricircle/common.hpp"
#include "tricircle/regions.hpp"

namespace tricircle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Basis for every area expression in the decomposition, with a, b, c, theta as
// independent symbols and u = theta/360 (dimensionless). Theta-dependence is
// confined to the three u-terms, so "the angle cancels" is a zero-coefficient
// statement, not a numeric one.
enum class BasisTerm {
    PA,   // pi*a^2
    PB,   // pi*b^2
    PC,   // pi*c^2
    UPA,  // pi*a^2*u
    UPB,  // pi*b^2*u
    UPC,  // pi*c^2*u
    AB,   // a*b
    A3B,  // a^3*b/c^2
    AB3,  // a*b^3/c^2
};

inline constexpr std::array<BasisTerm, 9> kBasisTerms{
    BasisTerm::PA,  BasisTerm::PB,  BasisTerm::PC,
    BasisTerm::UPA, BasisTerm::UPB, BasisTerm::UPC,
    BasisTerm::AB,  BasisTerm::A3B, BasisTerm::AB3};

inline constexpr std::string_view basis_name(BasisTerm t) {
    switch (t) {
        case BasisTerm::PA: return "PA";
        case BasisTerm::PB: return "PB";
        case BasisTerm::PC: return "PC";
        case BasisTerm::UPA: return "UPA";
        case BasisTerm::UPB: return "UPB";
        case BasisTerm::UPC: return "UPC";
        case BasisTerm::AB: return "AB";
        case BasisTerm::A3B: return "A3B";
        case BasisTerm::AB3: return "AB3";
    }
    return "?";
}

/// Exact rational coefficient vector over the nine-term basis. A term not set
/// is zero; equality is coefficient-wise.
struct SymbolicArea {
    std::array<Rational, 9> coeffs{};

    Rational& operator[](BasisTerm t) { return coeffs[static_cast<std::size_t>(t)]; }
    const Rational& operator[](BasisTerm t) const {
        return coeffs[static_cast<std::size_t>(t)];
    }

    friend SymbolicArea operator+(SymbolicArea lhs, const SymbolicArea& rhs) {
        for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) lhs.coeffs[i] += rhs.coeffs[i];
        return lhs;
    }
    friend SymbolicArea operator-(SymbolicArea lhs, const SymbolicArea& rhs) {
        for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) lhs.coeffs[i] -= rhs.coeffs[i];
        return lhs;
    }
    friend bool operator==(const SymbolicArea& lhs, const SymbolicArea& rhs) {
        return lhs.coeffs == rhs.coeffs;
    }
};

/// The exact coefficients of each region's area over the basis.
inline SymbolicArea region_symbolic(RegionId id) {
    const Rational half{1, 2}, quarter{1, 4}, eighth{1, 8};
    SymbolicArea e;
    switch (id) {
        case RegionId::RA:
            e[BasisTerm::PC] = eighth;
            e[BasisTerm::UPC] = -half;
            e[BasisTerm::AB] = -quarter;
            break;
        case RegionId::RB:
            e[BasisTerm::UPC] = half;
            e[BasisTerm::AB] = -quarter;
            break;
        case RegionId::RC:
            e[BasisTerm::PB] = eighth;
            e[BasisTerm::UPB] = -half;
            e[BasisTerm::AB3] = -quarter;
            break;
        case RegionId::RD:
            e[BasisTerm::UPB] = half;
            e[BasisTerm::AB3] = -quarter;
            break;
        case RegionId::RE:
            e[BasisTerm::PA] = eighth;
            e[BasisTerm::UPA] = -half;
            e[BasisTerm::A3B] = -quarter;
            break;
        case RegionId::RF:
            e[BasisTerm::UPA] = half;
            e[BasisTerm::A3B] = -quarter;
            break;
        case RegionId::SA:
            e[BasisTerm::PA] = eighth;
            break;
        case RegionId::SB:
            e[BasisTerm::PB] = eighth;
            break;
        case RegionId::SC:
            e[BasisTerm::PC] = eighth;
            break;
        case RegionId::TRI_ABC:
            e[BasisTerm::AB] = half;
            break;
        case RegionId::TRI_AGC:
            e[BasisTerm::AB3] = half;
            break;
        case RegionId::TRI_CGB:
            e[BasisTerm::A3B] = half;
            break;
    }
    return e;
}

/// SA + SB + RA + RB - RC - RD - RE - RF by exact coefficient addition.
/// Equals {PC: 1/8, AB: -1/2, A3B: 1/2, AB3: 1/2}; every u-term vanishes.
inline SymbolicArea decomposition_ledger() {
    using R = RegionId;
    return region_symbolic(R::SA) + region_symbolic(R::SB) + region_symbolic(R::RA) +
           region_symbolic(R::RB) - region_symbolic(R::RC) - region_symbolic(R::RD) -
           region_symbolic(R::RE) - region_symbolic(R::RF);
}

/// Numeric substitution; the exact rationals are converted only when each term
/// is multiplied in.
inline double evaluate(const SymbolicArea& expr, double a, double b, double c,
                       double theta_deg) {
    require_positive_finite(a, "a");
    require_positive_finite(b, "b");
    require_positive_finite(c, "c");
    if (!std::isfinite(theta_deg)) throw DomainError("theta must be finite");
    constexpr double pi = std::numbers::pi;
    const double u = theta_deg / 360.0;
    const double values[9] = {
        pi * a * a,     pi * b * b,     pi * c * c,
        pi * a * a * u, pi * b * b * u, pi * c * c * u,
        a * b,          a * a * a * b / (c * c), a * b * b * b / (c * c)};
    double sum = 0.0;
    for (std::size_t i = 0; i < 9; ++i)
        sum += static_cast<double>(expr.coeffs[i]) * values[i];
    return sum;
}

/// evaluate(decomposition_ledger) - pi*c^2/8. Algebraically
/// (ab/2)((a^2+b^2)/c^2 - 1); zero exactly when a^2 + b^2 = c^2.
inline double pythagoras_residual(double a, double b, double c) {
    // Theta is immaterial: the ledger's u-coefficients are exactly zero.
    const double total = evaluate(decomposition_ledger(), a, b, c, 45.0);
    return total - std::numbers::pi * c * c / 8;
}

/// Root of pythagoras_residual in c by bisection on [max(a,b), a+b]. The
/// residual is strictly decreasing in c and brackets by the triangle
/// inequality, so 200 halvings pin the root to double precision.
inline double pythagoras_root(double a, double b) {
    require_positive_finite(a, "a");
    require_positive_finite(b, "b");
    double lo = std::max(a, b), hi = a + b;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        if (pythagoras_residual(a, b, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

namespace detail {

// Minimal exact trivariate polynomial in (a, b, c): exponent triple -> integer
// coefficient. Just enough to state the factoring step as an identity.
struct Trivariate {
    std::map<std::array<int, 3>, BigInt> terms;

    static Trivariate monomial(BigInt coeff, int ea, int eb, int ec) {
        Trivariate p;
        p.terms[{ea, eb, ec}] = std::move(coeff);
        return p;
    }
    friend Trivariate operator+(Trivariate lhs, const Trivariate& rhs) {
        for (const auto& [exp, coeff] : rhs.terms) {
            auto& slot = lhs.terms[exp];
            slot += coeff;
            if (slot == 0) lhs.terms.erase(exp);
        }
        return lhs;
    }
    friend Trivariate operator-(const Trivariate& lhs, const Trivariate& rhs) {
        Trivariate neg;
        for (const auto& [exp, coeff] : rhs.terms) neg.terms[exp] = -coeff;
        return lhs + neg;
    }
    friend Trivariate operator*(const Trivariate& lhs, const Trivariate& rhs) {
        Trivariate prod;
        for (const auto& [le, lc] : lhs.terms)
            for (const auto& [re, rc] : rhs.terms) {
                const std::array<int, 3> exp{le[0] + re[0], le[1] + re[1], le[2] + re[2]};
                auto& slot = prod.terms[exp];
                slot += lc * rc;
                if (slot == 0) prod.terms.erase(exp);
            }
        return prod;
    }
    friend bool operator==(const Trivariate& lhs, const Trivariate& rhs) {
        return lhs.terms == rhs.terms;
    }
};

}  // namespace detail

/// Verifies a^3*b + a*b^3 - a*b*c^2 == a*b*(a^2 + b^2 - c^2) by exact
/// polynomial arithmetic over the integers.
inline bool residual_polynomial_identity() {
    using detail::Trivariate;
    const auto mono = [](int k, int ea, int eb, int ec) {
        return Trivariate::monomial(BigInt(k), ea, eb, ec);
    };
    const Trivariate lhs = mono(1, 3, 1, 0) + mono(1, 1, 3, 0) - mono(1, 1, 1, 2);
    const Trivariate rhs =
        mono(1, 1, 1, 0) * (mono(1, 2, 0, 0) + mono(1, 0, 2, 0) - mono(1, 0, 0, 2));
    return lhs == rhs;
}

/// "p/q" (or "p" when integral), for the ledger table.
inline std::string rational_str(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

}  // namespace tricircle
