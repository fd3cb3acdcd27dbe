// Copyright 2026 the Nightbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace nightbeam {

// Vehicle frame used everywhere: x forward, y left, z up.
// Yaw is measured counterclockwise from +x, so 0 deg faces away from the
// vehicle, 180 deg faces it, and 90 deg points to +y (left).

constexpr double kDegPerRad = 180.0 / M_PI;

struct Vec2 {
    double x{0.0};
    double y{0.0};

    [[nodiscard]] constexpr double dot(const Vec2& o) const noexcept { return x * o.x + y * o.y; }
    [[nodiscard]] double norm() const noexcept { return std::hypot(x, y); }
    [[nodiscard]] constexpr Vec2 operator+(const Vec2& o) const noexcept { return {x + o.x, y + o.y}; }
    [[nodiscard]] constexpr Vec2 operator-(const Vec2& o) const noexcept { return {x - o.x, y - o.y}; }
    [[nodiscard]] constexpr Vec2 operator*(double s) const noexcept { return {x * s, y * s}; }
    [[nodiscard]] constexpr bool operator==(const Vec2&) const noexcept = default;
};

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    [[nodiscard]] double norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }
    [[nodiscard]] constexpr Vec2 planar() const noexcept { return {x, y}; }
    [[nodiscard]] constexpr Vec3 operator+(const Vec3& o) const noexcept {
        return {x + o.x, y + o.y, z + o.z};
    }
    [[nodiscard]] constexpr Vec3 operator-(const Vec3& o) const noexcept {
        return {x - o.x, y - o.y, z - o.z};
    }
    [[nodiscard]] constexpr Vec3 operator*(double s) const noexcept { return {x * s, y * s, z * s}; }
    [[nodiscard]] constexpr bool operator==(const Vec3&) const noexcept = default;
};

struct Point3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    [[nodiscard]] bool finite() const noexcept {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
    [[nodiscard]] constexpr Vec3 operator-(const Point3& o) const noexcept {
        return {x - o.x, y - o.y, z - o.z};
    }
    [[nodiscard]] constexpr Point3 operator+(const Vec3& v) const noexcept {
        return {x + v.x, y + v.y, z + v.z};
    }
    [[nodiscard]] double distance_to(const Point3& o) const noexcept { return (*this - o).norm(); }
    /// Distance to the origin in the ground plane (z ignored).
    [[nodiscard]] double planar_range() const noexcept { return std::hypot(x, y); }
    [[nodiscard]] constexpr bool operator==(const Point3&) const noexcept = default;
};

/// Heading about the z axis, normalized to [0, 360).
class YawDegrees {
public:
    constexpr YawDegrees() noexcept = default;
    explicit YawDegrees(double degrees) noexcept : value_(normalize(degrees)) {}

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    /// Maps any finite angle into [0, 360). Idempotent.
    [[nodiscard]] static double normalize(double degrees) noexcept {
        double d = std::fmod(degrees, 360.0);
        if (d < 0.0) d += 360.0;
        if (d == 360.0) d = 0.0;  // fmod may return 360 - eps rounded up
        return d;
    }

    [[nodiscard]] constexpr bool operator==(const YawDegrees&) const noexcept = default;

private:
    double value_{0.0};
};

/// Axis-aligned box in the sensor frame, tightly fit around a cluster.
struct BoundingBox3D {
    Point3 min_corner;
    Point3 max_corner;
    double timestamp{0.0};  // virtual seconds
    int box_id{0};

    BoundingBox3D() = default;
    BoundingBox3D(const Point3& min_c, const Point3& max_c, double t, int id)
        : min_corner(min_c), max_corner(max_c), timestamp(t), box_id(id) {
        if (min_corner.x > max_corner.x || min_corner.y > max_corner.y ||
            min_corner.z > max_corner.z) {
            throw std::invalid_argument("BoundingBox3D: min_corner must be <= max_corner");
        }
        if (timestamp < 0.0) {
            throw std::invalid_argument("BoundingBox3D: timestamp must be >= 0");
        }
    }

    [[nodiscard]] Point3 center() const noexcept {
        return {0.5 * (min_corner.x + max_corner.x), 0.5 * (min_corner.y + max_corner.y),
                0.5 * (min_corner.z + max_corner.z)};
    }
    [[nodiscard]] double volume() const noexcept {
        return (max_corner.x - min_corner.x) * (max_corner.y - min_corner.y) *
               (max_corner.z - min_corner.z);
    }
};

/// Volume overlap ratio of two axis-aligned boxes: 1 for identical boxes,
/// 0 for disjoint ones. Zero-volume boxes yield 0 unless exactly identical.
inline double iou_3d(const BoundingBox3D& a, const BoundingBox3D& b) noexcept {
    if (a.min_corner == b.min_corner && a.max_corner == b.max_corner) return 1.0;
    const double ix = std::min(a.max_corner.x, b.max_corner.x) - std::max(a.min_corner.x, b.min_corner.x);
    const double iy = std::min(a.max_corner.y, b.max_corner.y) - std::max(a.min_corner.y, b.min_corner.y);
    const double iz = std::min(a.max_corner.z, b.max_corner.z) - std::max(a.min_corner.z, b.min_corner.z);
    if (ix <= 0.0 || iy <= 0.0 || iz <= 0.0) return 0.0;
    const double intersection = ix * iy * iz;
    const double unified = a.volume() + b.volume() - intersection;
    if (unified <= 0.0) return 0.0;
    return intersection / unified;
}

/// Unsigned angle between two planar vectors in [0, 180] degrees.
/// The cosine is clamped to [-1, 1] so rounding never produces NaN.
inline double angle_between_deg(const Vec2& u, const Vec2& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) {
        throw std::domain_error("angle_between_deg: zero-length vector");
    }
    double c = u.dot(v) / (nu * nv);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) * kDegPerRad;
}

/// Full-circle heading of a displacement, counterclockwise from +x.
/// Returns nullopt for a zero displacement (caller keeps its previous yaw).
/// The magnitude agrees with angle_between_deg against (1,0); the sign is
/// resolved by the y component.
inline std::optional<YawDegrees> heading_to_yaw(const Vec2& displacement) noexcept {
    if (displacement.x == 0.0 && displacement.y == 0.0) return std::nullopt;
    return YawDegrees(std::atan2(displacement.y, displacement.x) * kDegPerRad);
}

}  // namespace nightbeam
