#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "tricircle/regions.hpp"
#include "tricircle/symbolic.hpp"

namespace tricircle {

// ── deterministic sampling ──────────────────────────────────────────────────
//
// Counter-based, splittable PRNG: SplitMix64. Sample index space is cut into
// fixed chunks of kMcChunk; chunk k draws from the sub-stream seeded by
// mix64(seed + GOLDEN * (k + 1)), and partial results are reduced in chunk
// order. Identical (seed, samples) therefore yields identical estimates for
// any worker count.

inline constexpr std::uint64_t kSplitMixGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kMcChunk = 1u << 16;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += kSplitMixGolden);
        return mix64(z);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t chunk) {
    return SplitMix64{mix64(seed + kSplitMixGolden * (chunk + 1))};
}

// ── region membership, hot-loop form ────────────────────────────────────────

/// Precomputed strict-interior membership test for one RegionSpec; identical
/// semantics to region_contains.
struct MembershipTest {
    Point center;
    double radius_sq = 0.0;
    Point from;
    Point dir;             // chord_to - chord_from
    double snap_sq = 0.0;  // kGeomTol^2 * |dir|^2
    int want = 0;

    bool operator()(Point p) const {
        const Point v = p - center;
        if (v.x * v.x + v.y * v.y >= radius_sq) return false;
        const Point w = p - from;
        const double cr = dir.x * w.y - dir.y * w.x;
        if (cr * cr <= snap_sq * (w.x * w.x + w.y * w.y)) return false;  // on chord
        return (cr > 0.0 ? +1 : -1) == want;
    }
};

inline MembershipTest membership_test(const RegionSpec& spec) {
    MembershipTest t;
    t.center = spec.disk.center;
    t.radius_sq = spec.disk.radius * spec.disk.radius;
    t.from = spec.chord_from;
    t.dir = spec.chord_to - spec.chord_from;
    t.snap_sq = kGeomTol * kGeomTol * dot(t.dir, t.dir);
    t.want = chord_side(spec.interior_witness, spec.chord_from, spec.chord_to);
    if (t.want == 0) throw DomainError("region spec: witness collinear with chord");
    return t;
}

// ── quadrature oracle ───────────────────────────────────────────────────────

/// Segment area as r^2/2 * (alpha - sin alpha), with the central angle alpha
/// of the arc on the witness side taken from the chord geometry. This is a
/// different derivation path from the theta-based closed forms, so agreement
/// between the two is evidence rather than tautology.
inline double quadrature_segment_area(const CircleSpec& disk, Point chord_from,
                                      Point chord_to, Point side_witness) {
    const double r = disk.radius;
    if (deviation(distance(disk.center, chord_from), r) > kGeomTol ||
        deviation(distance(disk.center, chord_to), r) > kGeomTol)
        throw DomainError("quadrature_segment_area: chord endpoints not on the circle");
    const double chord_len = distance(chord_from, chord_to);
    if (chord_len == 0.0) return 0.0;  // tangent-point degeneracy: empty segment
    const int witness_side = chord_side(side_witness, chord_from, chord_to);
    if (witness_side == 0)
        throw DomainError("quadrature_segment_area: witness collinear with chord");
    const double half_ratio = std::min(1.0, chord_len / (2 * r));
    double alpha = 2 * std::asin(half_ratio);
    const int center_side = chord_side(disk.center, chord_from, chord_to);
    if (center_side == witness_side)
        alpha = 2 * std::numbers::pi - alpha;  // major arc on the witness side
    return r * r / 2 * (alpha - std::sin(alpha));
}

// ── Monte-Carlo oracle ──────────────────────────────────────────────────────

struct OracleEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    RegionId region{};
};

inline OracleEstimate mc_region_area(const RegionSpec& spec, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers = 1) {
    if (samples < 1000)
        throw DomainError("mc_region_area: need at least 1000 samples");
    if (!region_contains(spec, spec.interior_witness))
        throw DomainError("mc_region_area: witness is not inside the region");
    const MembershipTest member = membership_test(spec);
    const Point lo{spec.disk.center.x - spec.disk.radius,
                   spec.disk.center.y - spec.disk.radius};
    const double side = 2 * spec.disk.radius;

    const std::uint64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
    std::vector<std::uint64_t> hits(chunks, 0);
    const auto run_chunk = [&](std::uint64_t k) {
        SplitMix64 rng = substream(seed, k);
        const std::uint64_t begin = k * kMcChunk;
        const std::uint64_t end = std::min(begin + kMcChunk, samples);
        std::uint64_t h = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double x = lo.x + side * rng.next_unit();
            const double y = lo.y + side * rng.next_unit();
            h += member({x, y}) ? 1 : 0;
        }
        hits[k] = h;
    };
    if (workers <= 1) {
        for (std::uint64_t k = 0; k < chunks; ++k) run_chunk(k);
    } else {
        std::vector<std::future<void>> pending;
        for (std::uint64_t k = 0; k < chunks; ++k) {
            pending.push_back(std::async(std::launch::async, run_chunk, k));
            if (pending.size() == workers) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }
    std::uint64_t total_hits = 0;
    for (std::uint64_t k = 0; k < chunks; ++k) total_hits += hits[k];

    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(total_hits) / n;
    const double box_area = side * side;
    const double sample_sd = std::sqrt(p * (1.0 - p) * n / (n - 1.0));
    return OracleEstimate{box_area * p, box_area * sample_sd / std::sqrt(n), samples,
                          seed, spec.id};
}

// ── signed multiplicity check ───────────────────────────────────────────────

struct MultiplicityReport {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    std::uint64_t excluded_near_boundary = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

/// Samples disk D's bounding box and checks, pointwise, that the signed region
/// multiplicity 1_SA + 1_SB + 1_RA + 1_RB - 1_RC - 1_RD - 1_RE - 1_RF equals
/// the hypotenuse-semicircle indicator 1_SC. Points within epsilon of any
/// chord line or circle boundary are excluded (open-region semantics leave
/// membership undefined there).
inline MultiplicityReport multiplicity_check(const ConstructionScene& scene,
                                             std::uint64_t samples, std::uint64_t seed,
                                             double epsilon) {
    if (samples < 1000)
        throw DomainError("multiplicity_check: need at least 1000 samples");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw DomainError("multiplicity_check: epsilon must be positive");

    struct Signed {
        MembershipTest test;
        int weight;
    };
    std::vector<Signed> terms;
    for (RegionId id : {RegionId::SA, RegionId::SB, RegionId::RA, RegionId::RB})
        terms.push_back({membership_test(region_spec(id, scene)), +1});
    for (RegionId id : {RegionId::RC, RegionId::RD, RegionId::RE, RegionId::RF})
        terms.push_back({membership_test(region_spec(id, scene)), -1});
    const MembershipTest target = membership_test(region_spec(RegionId::SC, scene));

    struct ChordLine {
        Point from;
        Point unit;  // chord direction, normalized
    };
    std::vector<ChordLine> chords;
    for (RegionId id : kChordRegionIds) {
        const RegionSpec spec = region_spec(id, scene);
        const Point d = spec.chord_to - spec.chord_from;
        chords.push_back({spec.chord_from, (1.0 / norm(d)) * d});
    }
    const CircleSpec circles[] = {scene.circleD, scene.circleE, scene.circleF};

    const auto near_boundary = [&](Point p) {
        for (const ChordLine& ch : chords) {
            if (std::fabs(cross(ch.unit, p - ch.from)) <= epsilon) return true;
        }
        for (const CircleSpec& c : circles) {
            if (std::fabs(distance(p, c.center) - c.radius) <= epsilon) return true;
        }
        return false;
    };

    const Point lo{scene.circleD.center.x - scene.circleD.radius,
                   scene.circleD.center.y - scene.circleD.radius};
    const double side = 2 * scene.circleD.radius;

    MultiplicityReport report{samples, 0, 0, epsilon, seed};
    const std::uint64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
    for (std::uint64_t k = 0; k < chunks; ++k) {
        SplitMix64 rng = substream(seed, k);
        const std::uint64_t begin = k * kMcChunk;
        const std::uint64_t end = std::min(begin + kMcChunk, samples);
        for (std::uint64_t i = begin; i < end; ++i) {
            const Point p{lo.x + side * rng.next_unit(), lo.y + side * rng.next_unit()};
            if (near_boundary(p)) {
                ++report.excluded_near_boundary;
                continue;
            }
            int m = 0;
            for (const Signed& t : terms) m += t.test(p) ? t.weight : 0;
            const int s = target(p) ? 1 : 0;
            if (m != s) ++report.violations;
        }
    }
    return report;
}

// ── full verification ───────────────────────────────────────────────────────

struct VerifyConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    double tol_analytic = 1e-9;
    double tol_stat = 5e-3;  // absolute cushion on the 3-sigma Monte-Carlo gate
    double epsilon = 0.0;    // boundary exclusion band; <= 0 means 1e-9 * c
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<OracleEstimate> estimates;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
};

/// Runs every verification route on one triangle. Mathematical failures are
/// reported, never thrown; only an invalid config throws.
inline VerificationReport verify_all(const RightTriangle& tri,
                                     const VerifyConfig& config = {}) {
    if (config.samples < 1000)
        throw DomainError("verify_all: config.samples must be at least 1000");
    if (!(config.tol_analytic > 0.0) || !std::isfinite(config.tol_analytic) ||
        !(config.tol_stat >= 0.0) || !std::isfinite(config.tol_stat))
        throw DomainError("verify_all: invalid tolerances");

    const ConstructionScene scene = construct_scene(tri);
    const double eps =
        config.epsilon > 0.0 ? config.epsilon : 1e-9 * tri.c;

    VerificationReport report;
    report.seed = config.seed;
    report.samples = config.samples;
    const auto add = [&](std::string name, double residual, double tol) {
        report.checks.push_back(
            {std::move(name), std::fabs(residual) <= tol, std::fabs(residual), tol});
    };

    // 1. scene invariants
    const SceneResiduals sr = scene_residuals(scene);
    add("scene.g_on_hypotenuse", sr.g_on_hypotenuse, config.tol_analytic);
    add("scene.cg_perpendicular", sr.cg_perpendicular, config.tol_analytic);
    add("scene.g_on_circle_e", sr.g_on_circle_e, config.tol_analytic);
    add("scene.g_on_circle_f", sr.g_on_circle_f, config.tol_analytic);
    add("scene.g_closed_form", sr.g_closed_form, 1e-12);
    add("scene.thales_right_angle_deg", sr.thales_at_g_deg, 1e-9);

    // 2. angle ledger vs direct measurement
    add("angles.ledger_deg", angle_ledger_residual_deg(scene), 1e-9);

    // 3. closed forms vs the chord-geometry quadrature oracle
    for (RegionId id : kChordRegionIds) {
        const RegionSpec spec = region_spec(id, scene);
        const double quad = quadrature_segment_area(spec.disk, spec.chord_from,
                                                    spec.chord_to, spec.interior_witness);
        add("quadrature." + std::string(region_name(id)),
            deviation(quad, region_area(id, tri)), config.tol_analytic);
    }

    // 4. Monte-Carlo estimates
    for (RegionId id : kChordRegionIds) {
        const OracleEstimate est =
            mc_region_area(region_spec(id, scene), config.samples, config.seed);
        report.estimates.push_back(est);
        const double closed = region_area(id, tri);
        add("mc." + std::string(region_name(id)), est.mean - closed,
            3 * est.std_error + config.tol_stat);
    }

    // 5. signed multiplicity
    const MultiplicityReport mult =
        multiplicity_check(scene, config.samples, config.seed, eps);
    add("multiplicity.zero_violations", static_cast<double>(mult.violations), 0.0);

    // 6. exact ledger assertions
    const SymbolicArea ledger = decomposition_ledger();
    const bool cancelled = ledger[BasisTerm::UPA] == 0 && ledger[BasisTerm::UPB] == 0 &&
                           ledger[BasisTerm::UPC] == 0 && ledger[BasisTerm::PA] == 0 &&
                           ledger[BasisTerm::PB] == 0;
    add("symbolic.theta_cancellation", cancelled ? 0.0 : 1.0, 0.0);
    SymbolicArea boxed;
    boxed[BasisTerm::PC] = Rational{1, 8};
    boxed[BasisTerm::AB] = Rational{-1, 2};
    boxed[BasisTerm::A3B] = Rational{1, 2};
    boxed[BasisTerm::AB3] = Rational{1, 2};
    add("symbolic.boxed_coefficients", ledger == boxed ? 0.0 : 1.0, 0.0);
    double worst_eval = 0.0;
    for (RegionId id : kAllRegionIds) {
        const double sym =
            evaluate(region_symbolic(id), tri.a, tri.b, tri.c, scene.theta_deg);
        worst_eval = std::max(worst_eval, deviation(sym, region_area(id, tri)));
    }
    add("symbolic.matches_closed_forms", worst_eval, config.tol_analytic);

    // partition and decomposition identities (closed forms, exact algebra)
    const auto area = [&](RegionId id) { return region_area(id, tri); };
    add("partition.sb",
        deviation(area(RegionId::TRI_AGC) + area(RegionId::RC) + area(RegionId::RD),
                  area(RegionId::SB)),
        1e-12);
    add("partition.sa",
        deviation(area(RegionId::TRI_CGB) + area(RegionId::RE) + area(RegionId::RF),
                  area(RegionId::SA)),
        1e-12);
    add("partition.sc",
        deviation(area(RegionId::TRI_ABC) + area(RegionId::RA) + area(RegionId::RB),
                  area(RegionId::SC)),
        1e-12);
    add("decomposition.identity",
        deviation(area(RegionId::SA) + area(RegionId::SB) + area(RegionId::RA) +
                      area(RegionId::RB) - area(RegionId::RC) - area(RegionId::RD) -
                      area(RegionId::RE) - area(RegionId::RF),
                  area(RegionId::SC)),
        1e-12);

    // 7. the recovered identity, scaled to |(a^2+b^2)/c^2 - 1|
    add("pythagoras.residual",
        pythagoras_residual(tri.a, tri.b, tri.c) / (tri.a * tri.b / 2),
        config.tol_analytic);

    // notes
    if (tri.a > tri.b)
        report.notes.push_back(
            "legs given with a > b; no identity used here requires a <= b");
    if (deviation(tri.a, tri.b) <= 1e-12)
        report.notes.push_back(
            "isosceles input: G coincides with D, the midpoint of the hypotenuse");
    {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "segment-sum check: [RC]+[RD]-[AGC] = %.6f differs from [RA] = "
                      "%.6f; the half-disk partitions are the verified decomposition",
                      area(RegionId::RC) + area(RegionId::RD) - area(RegionId::TRI_AGC),
                      area(RegionId::RA));
        report.notes.push_back(buf);
    }
    report.notes.push_back(
        "signed multiplicity: the subtracted segments overlap the leg semicircles by "
        "construction; m(p) = s(p) holds almost everywhere rather than by disjoint "
        "union");
    return report;
}

}  // namespace tricircle
