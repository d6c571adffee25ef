#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "shapespline/error.hpp"

namespace shapespline {

/// Point or vector in R^3.
struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    constexpr Vec3& operator/=(double s) { x /= s; y /= s; z /= s; return *this; }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator/(Vec3 a, double s) { return a /= s; }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Vec3& v) {
        return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
    }
};

/// Point or vector in R^2.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    friend constexpr Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(const Vec2& a, double s) { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& a) { return {a.x * s, a.y * s}; }
    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
        return os << '(' << v.x << ", " << v.y << ')';
    }
};

[[nodiscard]] constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
[[nodiscard]] constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

[[nodiscard]] constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Planar cross product A1*B2 - A2*B1.
[[nodiscard]] constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Scalar triple product a . (b x c).
[[nodiscard]] constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

[[nodiscard]] constexpr double norm2(const Vec3& a) { return dot(a, a); }
[[nodiscard]] inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
[[nodiscard]] inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

[[nodiscard]] inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}
[[nodiscard]] inline bool is_finite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

inline void require_finite(const Vec3& a, const char* what) {
    if (!is_finite(a)) {
        throw DegenerateInput(std::string(what) + " has a non-finite component");
    }
}

/// Unit vector along a; throws on the zero vector.
[[nodiscard]] inline Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (!(n > 0.0)) {
        throw DegenerateInput("cannot normalize a zero vector");
    }
    return a / n;
}

/// Largest absolute component.
[[nodiscard]] inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}

/// |a x b| / (|a||b|), the sine of the angle between a and b.
[[nodiscard]] inline double sine_angle(const Vec3& a, const Vec3& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (!(na > 0.0) || !(nb > 0.0)) {
        throw DegenerateInput("sine_angle of a zero vector");
    }
    return std::clamp(norm(cross(a, b)) / (na * nb), 0.0, 1.0);
}

/// Plane {p : p.normal + offset = 0}.
class Plane {
public:
    Plane(const Vec3& normal, double offset) : normal_(normal), offset_(offset) {
        if (!is_finite(normal) || !std::isfinite(offset)) {
            throw DegenerateInput("plane has non-finite data");
        }
        if (!(norm2(normal) > 0.0)) {
            throw InvalidPlane();
        }
    }

    /// Plane through `point` with the given normal.
    static Plane through(const Vec3& point, const Vec3& normal) { return Plane(normal, -dot(point, normal)); }

    [[nodiscard]] const Vec3& normal() const noexcept { return normal_; }
    [[nodiscard]] double offset() const noexcept { return offset_; }

    /// Signed value of the plane equation at p (not normalized).
    [[nodiscard]] double evaluate(const Vec3& p) const { return dot(p, normal_) + offset_; }

private:
    Vec3 normal_;
    double offset_;
};

/// Orthogonal projection of p onto the plane.
[[nodiscard]] inline Vec3 project_point(const Vec3& p, const Plane& pl) {
    return p - (pl.evaluate(p) / norm2(pl.normal())) * pl.normal();
}

/// Removes the component of v along n (projection onto the linear subspace n-perp).
[[nodiscard]] inline Vec3 reject(const Vec3& v, const Vec3& n) {
    const double nn = norm2(n);
    if (!(nn > 0.0)) {
        throw InvalidPlane();
    }
    return v - (dot(v, n) / nn) * n;
}

} // namespace shapespline
