#pragma once
#include <cmath>

#include "vertexlab/jet.hpp"

namespace vertexlab {

struct Vec2 {
    double x{0}, y{0};
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
// Tangent rotated +90 degrees (left normal convention).
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Vec3 {
    double x{0}, y{0}, z{0};
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double c, Vec3 a) { return {c * a.x, c * a.y, c * a.z}; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// A plane point (or (t,theta) surface parameter point) together with its first
// three parameter derivatives.
struct Jet2 {
    Jet x, y;

    Vec2 p() const { return {x.f, y.f}; }
    Vec2 d1() const { return {x.d1, y.d1}; }
    Vec2 d2() const { return {x.d2, y.d2}; }
    Vec2 d3() const { return {x.d3, y.d3}; }
};

}  // namespace vertexlab
