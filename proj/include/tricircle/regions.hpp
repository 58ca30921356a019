#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

#include "tricircle/geometry.hpp"

namespace tricircle {

// RA..RF are the six circular segments (renamed from A..F to avoid colliding
// with the point names); SA/SB/SC the semicircles on legs a, b and the
// hypotenuse; TRI_* the reference triangles.
enum class RegionId {
    RA, RB, RC, RD, RE, RF,
    SA, SB, SC,
    TRI_ABC, TRI_AGC, TRI_CGB,
};

inline constexpr std::array<RegionId, 6> kSegmentIds{
    RegionId::RA, RegionId::RB, RegionId::RC,
    RegionId::RD, RegionId::RE, RegionId::RF};

inline constexpr std::array<RegionId, 9> kChordRegionIds{
    RegionId::RA, RegionId::RB, RegionId::RC, RegionId::RD, RegionId::RE,
    RegionId::RF, RegionId::SA, RegionId::SB, RegionId::SC};

inline constexpr std::array<RegionId, 12> kAllRegionIds{
    RegionId::RA, RegionId::RB, RegionId::RC, RegionId::RD,
    RegionId::RE, RegionId::RF, RegionId::SA, RegionId::SB,
    RegionId::SC, RegionId::TRI_ABC, RegionId::TRI_AGC, RegionId::TRI_CGB};

inline constexpr std::string_view region_name(RegionId id) {
    switch (id) {
        case RegionId::RA: return "RA";
        case RegionId::RB: return "RB";
        case RegionId::RC: return "RC";
        case RegionId::RD: return "RD";
        case RegionId::RE: return "RE";
        case RegionId::RF: return "RF";
        case RegionId::SA: return "SA";
        case RegionId::SB: return "SB";
        case RegionId::SC: return "SC";
        case RegionId::TRI_ABC: return "TRI_ABC";
        case RegionId::TRI_AGC: return "TRI_AGC";
        case RegionId::TRI_CGB: return "TRI_CGB";
    }
    return "?";
}

/// A chord-bounded region of one disk: the points of the open disk strictly on
/// the witness's side of the chord.
struct RegionSpec {
    RegionId id{};
    CircleSpec disk;
    Point chord_from, chord_to;
    Point interior_witness;
};

/// Strict-interior membership; boundary points belong to nothing.
inline bool region_contains(const RegionSpec& spec, Point p) {
    const Point v = p - spec.disk.center;
    if (dot(v, v) >= spec.disk.radius * spec.disk.radius) return false;
    const int side = chord_side(p, spec.chord_from, spec.chord_to);
    return side != 0 &&
           side == chord_side(spec.interior_witness, spec.chord_from, spec.chord_to);
}

namespace detail {

// Witness strictly inside the chord/arc region: halfway between the chord
// midpoint and the arc apex on the required side.
inline RegionSpec make_segment_spec(RegionId id, const CircleSpec& disk, Point from,
                                    Point to, Point ref, bool region_contains_ref) {
    const int ref_side = chord_side(ref, from, to);
    if (ref_side == 0)
        throw DomainError("region_spec: reference point collinear with chord");
    const int want = region_contains_ref ? ref_side : -ref_side;
    const Point d = to - from;
    Point n{-d.y / norm(d), d.x / norm(d)};  // unit normal on the +1 side
    if (want < 0) n = {-n.x, -n.y};
    const Point m = midpoint(from, to);
    const double h = dot(m - disk.center, n);  // signed: chord offset along n
    const Point witness = disk.center + ((h + disk.radius) / 2) * n;
    return RegionSpec{id, disk, from, to, witness};
}

}  // namespace detail

inline RegionSpec region_spec(RegionId id, const ConstructionScene& s) {
    const RightTriangle& t = s.tri;
    using detail::make_segment_spec;
    switch (id) {
        case RegionId::RA:
            return make_segment_spec(id, s.circleD, t.A, t.C, t.B, false);
        case RegionId::RB:
            return make_segment_spec(id, s.circleD, t.C, t.B, t.A, false);
        case RegionId::RC:
            return make_segment_spec(id, s.circleE, t.A, s.G, t.C, false);
        case RegionId::RD:
            return make_segment_spec(id, s.circleE, t.C, s.G, t.A, false);
        case RegionId::RE:
            return make_segment_spec(id, s.circleF, t.C, s.G, t.B, false);
        case RegionId::RF:
            return make_segment_spec(id, s.circleF, s.G, t.B, t.C, false);
        case RegionId::SA:
            return make_segment_spec(id, s.circleF, t.C, t.B, s.G, true);
        case RegionId::SB:
            return make_segment_spec(id, s.circleE, t.A, t.C, s.G, true);
        case RegionId::SC:
            return make_segment_spec(id, s.circleD, t.A, t.B, t.C, true);
        default:
            throw DomainError("region_spec: triangles are not chord-segment regions");
    }
}

/// Closed-form area with the sector fractions in the degree convention.
inline double region_area(RegionId id, const RightTriangle& t) {
    constexpr double pi = std::numbers::pi;
    const double a = t.a, b = t.b, c = t.c;
    const double theta = deg_from_rad(std::atan2(a, b));  // angle at A
    const double minor = 2 * theta / 360.0;               // fraction of the full turn
    const double major = (180.0 - 2 * theta) / 360.0;
    switch (id) {
        case RegionId::RA: return pi * c * c / 4 * major - a * b / 4;
        case RegionId::RB: return pi * c * c / 4 * minor - a * b / 4;
        case RegionId::RC: return pi * b * b / 4 * major - a * b * b * b / (4 * c * c);
        case RegionId::RD: return pi * b * b / 4 * minor - a * b * b * b / (4 * c * c);
        case RegionId::RE: return pi * a * a / 4 * major - a * a * a * b / (4 * c * c);
        case RegionId::RF: return pi * a * a / 4 * minor - a * a * a * b / (4 * c * c);
        case RegionId::SA: return pi * a * a / 8;
        case RegionId::SB: return pi * b * b / 8;
        case RegionId::SC: return pi * c * c / 8;
        case RegionId::TRI_ABC: return a * b / 2;
        case RegionId::TRI_AGC: return a * b * b * b / (2 * c * c);
        case RegionId::TRI_CGB: return a * a * a * b / (2 * c * c);
    }
    throw DomainError("region_area: unknown region");
}

/// The ten named angles of the figure, all determined by theta.
struct AngleLedger {
    double theta;
    double angle_EAG, angle_EGA;
    double angle_CBG, angle_FBG, angle_FGB;
    double angle_BFG, angle_CEG;
    double angle_CFG, angle_AEG;
};

/// Populates the ledger from theta and validates every entry against a direct
/// measurement on the scene's coordinates (tolerance in degrees).
inline AngleLedger angle_ledger(const ConstructionScene& s, double tol_deg = kGeomTol) {
    AngleLedger l{};
    l.theta = s.theta_deg;
    l.angle_EAG = l.angle_EGA = l.theta;
    l.angle_CBG = l.angle_FBG = l.angle_FGB = 90.0 - l.theta;
    l.angle_BFG = l.angle_CEG = 2 * l.theta;
    l.angle_CFG = l.angle_AEG = 180.0 - 2 * l.theta;

    const RightTriangle& t = s.tri;
    const struct {
        const char* name;
        double stated;
        double measured;
    } entries[] = {
        {"EAG", l.angle_EAG, measure_angle(t.A, s.E, s.G)},
        {"EGA", l.angle_EGA, measure_angle(s.G, s.E, t.A)},
        {"CBG", l.angle_CBG, measure_angle(t.B, t.C, s.G)},
        {"FBG", l.angle_FBG, measure_angle(t.B, s.F, s.G)},
        {"FGB", l.angle_FGB, measure_angle(s.G, s.F, t.B)},
        {"BFG", l.angle_BFG, measure_angle(s.F, t.B, s.G)},
        {"CEG", l.angle_CEG, measure_angle(s.E, t.C, s.G)},
        {"CFG", l.angle_CFG, measure_angle(s.F, t.C, s.G)},
        {"AEG", l.angle_AEG, measure_angle(s.E, t.A, s.G)},
    };
    for (const auto& e : entries) {
        if (std::fabs(e.stated - e.measured) > tol_deg)
            throw VerificationError(std::string("angle_ledger: angle ") + e.name +
                                    " deviates from measurement");
    }
    return l;
}

/// Largest |stated - measured| over the ledger entries, in degrees. Used by the
/// verification report, which wants the residual rather than an exception.
inline double angle_ledger_residual_deg(const ConstructionScene& s) {
    const RightTriangle& t = s.tri;
    const double th = s.theta_deg;
    const double pairs[][2] = {
        {th, measure_angle(t.A, s.E, s.G)},
        {th, measure_angle(s.G, s.E, t.A)},
        {90.0 - th, measure_angle(t.B, t.C, s.G)},
        {90.0 - th, measure_angle(t.B, s.F, s.G)},
        {90.0 - th, measure_angle(s.G, s.F, t.B)},
        {2 * th, measure_angle(s.F, t.B, s.G)},
        {2 * th, measure_angle(s.E, t.C, s.G)},
        {180.0 - 2 * th, measure_angle(s.F, t.C, s.G)},
        {180.0 - 2 * th, measure_angle(s.E, t.A, s.G)},
    };
    double worst = 0.0;
    for (const auto& p : pairs) worst = std::max(worst, std::fabs(p[0] - p[1]));
    return worst;
}

struct AltitudeLengths {
    double GH;  // altitude from G onto AC: a*b^2/c^2
    double GJ;  // altitude from G onto CB: a^2*b/c^2
};

inline AltitudeLengths altitude_lengths(const RightTriangle& t) {
    return {t.a * t.b * t.b / (t.c * t.c), t.a * t.a * t.b / (t.c * t.c)};
}

struct SimilarLengths {
    double AG;  // b^2/c
    double CG;  // ab/c
    double BG;  // a^2/c
};

/// Lengths of the hypotenuse split and the altitude, from triangle similarity.
inline SimilarLengths similar_lengths(const RightTriangle& t) {
    return {t.b * t.b / t.c, t.a * t.b / t.c, t.a * t.a / t.c};
}

struct AltTriangleAreas {
    double AEG;  // ab^3/(4c^2)
    double CEG;  // ab^3/(4c^2)
    double CFG;  // a^3b/(4c^2)
    double GFB;  // a^3b/(4c^2)
};

/// The four median-split triangle areas, in the trig-free similar-triangle
/// form. E and F are side midpoints, so each is half of [AGC] or [CGB].
inline AltTriangleAreas alt_triangle_areas(const RightTriangle& t) {
    const double leg_b_pair = t.a * t.b * t.b * t.b / (4 * t.c * t.c);
    const double leg_a_pair = t.a * t.a * t.a * t.b / (4 * t.c * t.c);
    return {leg_b_pair, leg_b_pair, leg_a_pair, leg_a_pair};
}

}  // namespace tricircle
