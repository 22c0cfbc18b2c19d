#pragma once

#include <cmath>

namespace circq {

/// Tangent vector in the fixed local coordinates.
struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vector3 operator-() const { return {-x, -y, -z}; }
    constexpr Vector3 operator*(double k) const { return {k * x, k * y, k * z}; }
    constexpr Vector3 operator/(double k) const { return {x / k, y / k, z / k}; }

    constexpr bool operator==(const Vector3&) const = default;

    constexpr bool is_zero() const { return x == 0.0 && y == 0.0 && z == 0.0; }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

    // Euclidean helpers; metric-aware versions live in core.hpp.
    constexpr double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr double sum() const { return x + y + z; }
    double max_abs() const { return std::fmax(std::fabs(x), std::fmax(std::fabs(y), std::fabs(z))); }
};

constexpr Vector3 operator*(double k, const Vector3& v) { return v * k; }

} // namespace circq
