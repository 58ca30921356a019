#pragma once

#include <cmath>
#include <numbers>

#include "tricircle/common.hpp"

namespace tricircle {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point u, Point v) { return u.x * v.x + u.y * v.y; }
inline double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }
inline double norm(Point u) { return std::hypot(u.x, u.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
inline Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

struct CircleSpec {
    Point center;
    double radius = 0.0;
};

/// Right triangle in the canonical frame: right angle at C = (0,0),
/// B = (a,0), A = (0,b); c is the length of the hypotenuse AB.
struct RightTriangle {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    Point A, B, C;
};

/// The full figure: circles on the three sides, the altitude foot G on AB,
/// and its axis projections H (onto AC) and J (onto CB).
struct ConstructionScene {
    RightTriangle tri;
    Point D, E, F;  // midpoints of AB, AC, CB (circle centers)
    CircleSpec circleD, circleE, circleF;
    Point G, H, J;
    double theta_deg = 0.0;  // angle at vertex A, degrees
};

inline double deg_from_rad(double r) { return r * 180.0 / std::numbers::pi; }

inline RightTriangle build_triangle(double a, double b) {
    require_positive_finite(a, "leg a");
    require_positive_finite(b, "leg b");
    RightTriangle t;
    t.a = a;
    t.b = b;
    t.C = {0.0, 0.0};
    t.B = {a, 0.0};
    t.A = {0.0, b};
    // c is measured, not assumed: the verified identities conclude a^2+b^2=c^2
    // rather than feed it in.
    t.c = distance(t.A, t.B);
    return t;
}

/// Unsigned angle at `vertex` between the rays to ray1 and ray2, in (0, 180]
/// degrees. Symmetric in ray1/ray2.
inline double measure_angle(Point vertex, Point ray1, Point ray2) {
    const Point u = ray1 - vertex;
    const Point v = ray2 - vertex;
    if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0))
        throw DomainError("measure_angle: ray endpoint equals vertex");
    return deg_from_rad(std::atan2(std::fabs(cross(u, v)), dot(u, v)));
}

/// Side of the directed chord chord_from->chord_to that p lies on: the sign of
/// (chord_to - chord_from) x (p - chord_from). Returns 0 when p is collinear
/// with the chord within an angular band of kGeomTol (robust against the
/// rounding of points constructed on the chord).
inline int chord_side(Point p, Point chord_from, Point chord_to) {
    const Point d = chord_to - chord_from;
    if (d.x == 0.0 && d.y == 0.0)
        throw DomainError("chord_side: degenerate chord");
    const Point w = p - chord_from;
    const double cr = cross(d, w);
    if (cr * cr <= kGeomTol * kGeomTol * dot(d, d) * dot(w, w)) return 0;
    return cr > 0.0 ? +1 : -1;
}

inline ConstructionScene construct_scene(const RightTriangle& tri) {
    ConstructionScene s;
    s.tri = tri;
    s.D = midpoint(tri.A, tri.B);
    s.E = midpoint(tri.A, tri.C);
    s.F = midpoint(tri.C, tri.B);
    s.circleD = {s.D, tri.c / 2};
    s.circleE = {s.E, tri.b / 2};
    s.circleF = {s.F, tri.a / 2};
    // G: orthogonal projection of C onto AB. Unconditionally stable, unlike
    // picking the non-C root of the circle E / circle F intersection.
    const Point d = tri.B - tri.A;
    const double t = -dot(tri.A - tri.C, d) / dot(d, d);
    s.G = tri.A + t * d;
    s.H = {0.0, s.G.y};
    s.J = {s.G.x, 0.0};
    s.theta_deg = measure_angle(tri.A, tri.C, tri.B);
    return s;
}

inline ConstructionScene construct_scene(double a, double b) {
    return construct_scene(build_triangle(a, b));
}

/// Named residuals of the scene invariants, for tests and the verification
/// report. All are 0 for an exact construction; tolerances are the caller's.
struct SceneResiduals {
    double g_on_hypotenuse;    // distance(G, line AB) / c
    double cg_perpendicular;   // |cos| of the angle between CG and AB
    double g_on_circle_e;      // relative | |EG| - b/2 |
    double g_on_circle_f;      // relative | |FG| - a/2 |
    double g_closed_form;      // relative distance(G, (ab^2/c^2, a^2b/c^2))
    double thales_at_g_deg;    // max deviation of angles CGA, CGB from 90 degrees
};

inline SceneResiduals scene_residuals(const ConstructionScene& s) {
    const RightTriangle& t = s.tri;
    SceneResiduals r{};
    const Point d = t.B - t.A;
    r.g_on_hypotenuse = std::fabs(cross(d, s.G - t.A)) / (norm(d) * t.c);
    r.cg_perpendicular = std::fabs(dot(s.G - t.C, d)) / (norm(s.G - t.C) * norm(d));
    r.g_on_circle_e = deviation(distance(s.E, s.G), t.b / 2);
    r.g_on_circle_f = deviation(distance(s.F, s.G), t.a / 2);
    const Point g_formula{t.a * t.b * t.b / (t.c * t.c), t.a * t.a * t.b / (t.c * t.c)};
    r.g_closed_form = distance(s.G, g_formula) / norm(g_formula);
    r.thales_at_g_deg = std::max(std::fabs(measure_angle(s.G, t.C, t.A) - 90.0),
                                 std::fabs(measure_angle(s.G, t.C, t.B) - 90.0));
    return r;
}

}  // namespace tricircle
