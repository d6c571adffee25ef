#pragma once

#include <array>
#include <cmath>
#include <string>

#include "shapespline/error.hpp"
#include "shapespline/vec.hpp"

namespace shapespline {

struct Derivatives {
    Vec3 d1;
    Vec3 d2;
    Vec3 d3;
};

/// Quadratic Bernstein expansion q0 (1-t)^2 + q1 2t(1-t) + q2 t^2.
struct QuadCross {
    Vec3 q0;
    Vec3 q1;
    Vec3 q2;

    [[nodiscard]] Vec3 eval(double t) const {
        const double s = 1.0 - t;
        return s * s * q0 + 2.0 * t * s * q1 + t * t * q2;
    }
};

/// c(t) x c'(t) for the quadratic Bezier curve with control points c0, c1, c2.
[[nodiscard]] inline QuadCross quadratic_cross(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return {2.0 * cross(c0, c1), cross(c0, c2), 2.0 * cross(c1, c2)};
}

/// omega(u) = g0 (1-u)^2 + g1 u(1-u) + g2 u^2.
struct CurvatureQuad {
    Vec3 g0;
    Vec3 g1;
    Vec3 g2;

    [[nodiscard]] Vec3 eval(double u) const {
        const double s = 1.0 - u;
        return s * s * g0 + u * s * g1 + u * u * g2;
    }
    [[nodiscard]] std::array<Vec3, 3> coefficients() const { return {g0, g1, g2}; }
};

/// Cubic Hermite segment from p0 to p3 with end tangents m0, m1 over a
/// parameter interval of width h. Derivatives are with respect to the global
/// parameter t = t0 + h u.
class CubicSegment {
public:
    CubicSegment(const Vec3& p0, const Vec3& p3, const Vec3& m0, const Vec3& m1, double h)
        : p0_(p0), p3_(p3), m0_(m0), m1_(m1), h_(h) {
        require_finite(p0, "segment start");
        require_finite(p3, "segment end");
        require_finite(m0, "start tangent");
        require_finite(m1, "end tangent");
        if (!std::isfinite(h) || !(h > 0.0)) {
            throw DomainError("segment parameter width must be positive");
        }
    }

    /// Segment from Bezier control points; tangents recovered as 3(b1-b0)/h and 3(b3-b2)/h.
    [[nodiscard]] static CubicSegment from_bezier(const Vec3& b0, const Vec3& b1, const Vec3& b2, const Vec3& b3,
                                                  double h) {
        return {b0, b3, (3.0 / h) * (b1 - b0), (3.0 / h) * (b3 - b2), h};
    }

    [[nodiscard]] const Vec3& p0() const noexcept { return p0_; }
    [[nodiscard]] const Vec3& p3() const noexcept { return p3_; }
    [[nodiscard]] const Vec3& m0() const noexcept { return m0_; }
    [[nodiscard]] const Vec3& m1() const noexcept { return m1_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] Vec3 chord() const { return p3_ - p0_; }

    [[nodiscard]] std::array<Vec3, 4> bezier() const {
        return {p0_, p0_ + (h_ / 3.0) * m0_, p3_ - (h_ / 3.0) * m1_, p3_};
    }

    /// Control points of gamma' as a quadratic Bezier curve.
    [[nodiscard]] std::array<Vec3, 3> hodograph() const {
        return {m0_, (3.0 / h_) * chord() - m0_ - m1_, m1_};
    }

    [[nodiscard]] Vec3 eval(double u) const {
        check_domain(u);
        const auto b = bezier();
        const double s = 1.0 - u;
        return (s * s * s) * b[0] + (3.0 * s * s * u) * b[1] + (3.0 * s * u * u) * b[2] + (u * u * u) * b[3];
    }

    [[nodiscard]] Derivatives eval_derivatives(double u) const {
        check_domain(u);
        const Vec3 L = chord();
        const double s = 1.0 - u;
        const Vec3 mid = (3.0 / h_) * L - m0_ - m1_;
        Derivatives d;
        d.d1 = (s * s) * m0_ + (2.0 * s * u) * mid + (u * u) * m1_;
        d.d2 = (2.0 / h_) * (s * ((3.0 / h_) * L - 2.0 * m0_ - m1_) + u * (-(3.0 / h_) * L + m0_ + 2.0 * m1_));
        d.d3 = third_derivative();
        return d;
    }

    /// Constant (6/h^3)(h(m0 + m1) - 2L).
    [[nodiscard]] Vec3 third_derivative() const {
        return (6.0 / (h_ * h_ * h_)) * (h_ * (m0_ + m1_) - 2.0 * chord());
    }

    [[nodiscard]] CurvatureQuad curvature_quad() const {
        const Vec3 L = chord();
        const Vec3 mm = cross(m0_, m1_);
        const double h2 = h_ * h_;
        return {(6.0 / h2) * cross(m0_, L) - (2.0 / h_) * mm, (2.0 / h_) * mm,
                (6.0 / h2) * cross(L, m1_) - (2.0 / h_) * mm};
    }

    /// det[gamma', gamma'', gamma'''], constant along the segment.
    [[nodiscard]] double torsion_numerator() const {
        const double h2 = h_ * h_;
        return (12.0 / (h2 * h2)) * triple(m0_, chord(), m1_);
    }

    /// Orthogonal projection of the control polygon onto a plane.
    [[nodiscard]] CubicSegment project(const Plane& pl) const {
        const auto b = bezier();
        return from_bezier(project_point(b[0], pl), project_point(b[1], pl), project_point(b[2], pl),
                           project_point(b[3], pl), h_);
    }

private:
    static void check_domain(double u) {
        if (!(u >= 0.0 && u <= 1.0)) {
            throw DomainError("local parameter " + std::to_string(u) + " outside [0, 1]");
        }
    }

    Vec3 p0_;
    Vec3 p3_;
    Vec3 m0_;
    Vec3 m1_;
    double h_;
};

} // namespace shapespline
