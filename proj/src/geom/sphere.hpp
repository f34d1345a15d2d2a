#pragma once

// Round-S^2 primitives shared by the numeric backend: unit vectors,
// great-circle geometry, spherical triangle solid angles, and the meridian
// sweepout point formulas.

#include <array>
#include <cmath>

namespace loopcalc::geom {

struct Vec3 {
    double x = 0, y = 0, z = 1;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(Vec3 v) {
    double n = norm(v);
    return n == 0 ? Vec3{0, 0, 1} : (1.0 / n) * v;
}

inline constexpr Vec3 north_pole() { return {0, 0, 1}; }

inline double great_circle_dist(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

// Spherical linear interpolation along the minor arc.
inline Vec3 slerp(Vec3 a, Vec3 b, double t) {
    double ang = great_circle_dist(a, b);
    double s = std::sin(ang);
    if (s < 1e-12) return t < 0.5 ? a : b;
    return normalized((std::sin((1 - t) * ang) / s) * a + (std::sin(t * ang) / s) * b);
}

// Signed solid angle of the geodesic triangle (a, b, c), van Oosterom-Strackee.
inline double solid_angle(Vec3 a, Vec3 b, Vec3 c) {
    double num = dot(a, cross(b, c));
    double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(num, den);
}

inline Vec3 from_polar(double theta, double phi) {
    double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// One loop of the meridian sweepout at parameter u, local time tau in [0,1]:
// descend the meridian at longitude 2*pi*u for tau < 1/2, return up the
// longitude-0 meridian. Not based: the u = 0 loop retraces meridian 0.
inline Vec3 sweep_point(double u, double tau) {
    if (tau <= 0.5) return from_polar(2.0 * tau * M_PI, 2.0 * M_PI * u);
    return from_polar((2.0 - 2.0 * tau) * M_PI, 0.0);
}

// Based variant: parameter caps of width `cap` shrink the loop to the
// constant loop at u = 0 and u = 1 (partial traversals down meridian 0), so
// the basepoint loop is genuinely constant. Same degree and suplength.
inline Vec3 based_sweep_point(double u, double tau, double cap) {
    double tent = (tau <= 0.5) ? 2.0 * tau : (2.0 - 2.0 * tau);
    if (u < cap) return from_polar(tent * M_PI * (u / cap), 0.0);
    if (u > 1.0 - cap) return from_polar(tent * M_PI * ((1.0 - u) / cap), 0.0);
    double uu = (u - cap) / (1.0 - 2.0 * cap);
    if (tau <= 0.5) return from_polar(2.0 * tau * M_PI, 2.0 * M_PI * uu);
    return from_polar((2.0 - 2.0 * tau) * M_PI, 0.0);
}

} // namespace loopcalc::geom
