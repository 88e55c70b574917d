#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

namespace fairsect {

// Collinearity / degeneracy tolerance. Absolute on unit-scale inputs,
// callers scale it by the bounding-box diagonal for larger geometry.
inline constexpr double kEpsGeo = 1e-12;

// Balanced-bisection tolerance, relative to the body diameter.
inline constexpr double kBalanceRel = 1e-9;

// Relative tolerance defining the near-optimum chord set.
inline constexpr double kNearRel = 1e-6;

// Angular tolerance for direction deduplication.
inline constexpr double kAngleTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double px, double py) : x(px), y(py) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
    // 90 degree counter-clockwise rotation.
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dist2(const Vec2& a, const Vec2& b) { return (a - b).norm2(); }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Twice the signed area of triangle (a, b, c); positive for CCW.
inline double cross3(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b - a).cross(c - a);
}

// Canonical representative of an unoriented direction: angle in [0, pi).
inline double direction_angle(const Vec2& v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += std::acos(-1.0);
    const double pi = std::acos(-1.0);
    if (a >= pi) a -= pi;
    return a;
}

// Antipodal-pair scan over a convex CCW ring. Tolerates exactly
// collinear runs of vertices; no duplicate points allowed.
struct DiameterResult {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

DiameterResult ring_diameter(std::span<const Vec2> pts);

struct WidthResult {
    double value = 0.0;
    std::size_t edge = 0;    // index of the supporting edge
    std::size_t vertex = 0;  // farthest vertex from that edge
    Vec2 direction;          // outer normal of the edge, angle in [0, pi)
};

WidthResult ring_width(std::span<const Vec2> pts);

}  // namespace fairsect
