#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "shapespline/directions.hpp"
#include "shapespline/tolerance.hpp"
#include "shapespline/vec.hpp"
#include "support/generators.hpp"

using namespace shapespline;

TEST(Vec3Cross, BasisIdentity) {
    EXPECT_EQ(cross(Vec3{1, 0, 0}, Vec3{0, 1, 0}), (Vec3{0, 0, 1}));
}

TEST(Vec3Cross, FirstExampleBinormals) {
    EXPECT_EQ(cross(Vec3{3, 3, 0.5}, Vec3{0, 0, 5}), (Vec3{15, -15, 0}));
    EXPECT_EQ(cross(Vec3{0, 0, 5}, Vec3{2, -4, 0.5}), (Vec3{20, 10, 0}));
}

TEST(Vec2Cross, Examples) {
    EXPECT_EQ(cross(Vec2{1, 0}, Vec2{0, 1}), 1.0);
    EXPECT_EQ(cross(Vec2{2, 3}, Vec2{4, 6}), 0.0);
    EXPECT_EQ(cross(Vec2{1, 2}, Vec2{3, 1}), -5.0);
}

TEST(Triple, MatchesCofactorDeterminant) {
    EXPECT_EQ(triple(Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}), 1.0);
    EXPECT_EQ(triple(Vec3{1, 2, 0}, Vec3{3, -1, 0}, Vec3{0.5, 7, 0}), 0.0);
    const Vec3 a{3, 3, 0.5}, b{0, 0, 5}, c{2, -4, 0.5};
    EXPECT_DOUBLE_EQ(testgen::det3(a, b, c), 90.0);
    EXPECT_DOUBLE_EQ(triple(a, b, c), 90.0);
}

TEST(Triple, AntisymmetricAndConsistent) {
    testgen::Gen g(1);
    for (int i = 0; i < 200; ++i) {
        const Vec3 a = g.vec(), b = g.vec(), c = g.vec();
        const double t = triple(a, b, c);
        EXPECT_NEAR(t, dot(cross(a, b), c), 1e-14);
        EXPECT_NEAR(t, -triple(b, a, c), 1e-14);
        EXPECT_NEAR(t, -triple(a, c, b), 1e-14);
        EXPECT_NEAR(t, testgen::det3(a, b, c), 1e-14);
    }
}

TEST(Cross, OrthogonalToInputs) {
    testgen::Gen g(2);
    for (int i = 0; i < 500; ++i) {
        const Vec3 a = g.vec(-10, 10), b = g.vec(-10, 10);
        const Vec3 c = cross(a, b);
        const double scale = norm(a) * norm(b) * std::max(norm(a), norm(b));
        EXPECT_LE(std::abs(dot(c, a)), 1e-12 * scale);
        EXPECT_LE(std::abs(dot(c, b)), 1e-12 * scale);
        EXPECT_EQ(cross(b, a), -c);
    }
}

TEST(ProjectPoint, KnownAndIdempotent) {
    const Plane z0(Vec3{0, 0, 1}, 0.0);
    EXPECT_EQ(project_point(Vec3{0, 0, 1}, z0), (Vec3{0, 0, 0}));
    EXPECT_EQ(project_point(Vec3{2, 3, 0}, z0), (Vec3{2, 3, 0}));
    testgen::Gen g(3);
    for (int i = 0; i < 300; ++i) {
        const Plane pl(g.vec(-3, 3), g.uniform(-2, 2));
        const Vec3 p = g.vec(-5, 5);
        const Vec3 q = project_point(p, pl);
        EXPECT_NEAR(pl.evaluate(q), 0.0, 1e-12 * (1 + norm(p)) * norm(pl.normal()));
        const Vec3 qq = project_point(q, pl);
        EXPECT_LE(norm(qq - q), 1e-12 * (1 + norm(q)));
    }
}

TEST(ProjectPoint, MinimizesDistanceAlongNormal) {
    // Golden-section search over p + sN for the point closest to the plane.
    testgen::Gen g(4);
    for (int i = 0; i < 50; ++i) {
        const Plane pl(g.vec(-2, 2), g.uniform(-1, 1));
        const Vec3 p = g.vec(-3, 3);
        const Vec3 n = pl.normal();
        auto f = [&](double s) { return std::abs(pl.evaluate(p + s * n)); };
        double lo = -100, hi = 100;
        const double phi = (std::sqrt(5.0) - 1) / 2;
        for (int it = 0; it < 200; ++it) {
            const double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
            (f(a) < f(b) ? hi : lo) = (f(a) < f(b) ? b : a);
        }
        const Vec3 expect = p + 0.5 * (lo + hi) * n;
        EXPECT_LE(norm(project_point(p, pl) - expect), 1e-7 * (1 + norm(p)));
    }
}

TEST(Plane, RejectsZeroNormal) {
    EXPECT_THROW(Plane(Vec3{0, 0, 0}, 1.0), InvalidPlane);
}

TEST(SineAngle, Examples) {
    EXPECT_EQ(sine_angle(Vec3{1, 2, 3}, Vec3{1, 2, 3}), 0.0);
    EXPECT_DOUBLE_EQ(sine_angle(Vec3{1, 0, 0}, Vec3{0, 1, 0}), 1.0);
    const double expect = std::sin(std::acos(1.0 / std::sqrt(2.0)));
    EXPECT_NEAR(sine_angle(Vec3{1, 0, 0}, Vec3{1, 1, 0}), expect, 1e-15);
    EXPECT_THROW((void)sine_angle(Vec3{0, 0, 0}, Vec3{1, 0, 0}), DegenerateInput);
}

TEST(SineAngle, StaysInUnitInterval) {
    testgen::Gen g(5);
    for (int i = 0; i < 500; ++i) {
        const Vec3 a = g.vec();
        const double s = sine_angle(a, g.coin() ? a * g.uniform(0.1, 3) : g.vec());
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 1.0);
    }
}

TEST(ParallelProjection, CrossAlongNormalUnchanged) {
    // (u + aN) x (v + bN) . N = (u x v) . N
    testgen::Gen g(6);
    for (int i = 0; i < 300; ++i) {
        const Vec3 N = g.vec(), u = g.vec(), v = g.vec();
        const double a = g.uniform(-5, 5), b = g.uniform(-5, 5);
        const double lhs = dot(cross(u + a * N, v + b * N), N);
        const double rhs = dot(cross(u, v), N);
        EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::abs(a) + std::abs(b)) * 10);
    }
}

TEST(Tolerances, Validation) {
    Tolerances t;
    EXPECT_NO_THROW(t.validate());
    t.eps0 = 0.0;
    EXPECT_THROW(t.validate(), DomainError);
    t = Tolerances{};
    t.eps1 = 1.5;
    EXPECT_THROW(t.validate(), DomainError);
    t = Tolerances{};
    t.eta_fraction = 0.0;
    EXPECT_THROW(t.validate(), DomainError);
}

TEST(Directions, IncludeAxesAndAreUnit) {
    const auto d = fibonacci_sphere(64);
    ASSERT_EQ(d.size(), 70U);
    for (const auto& v : d) {
        EXPECT_NEAR(norm(v), 1.0, 1e-12);
    }
    EXPECT_EQ(d[d.size() - 2], (Vec3{0, 0, 1}));
    EXPECT_EQ(d.back(), (Vec3{0, 0, -1}));
}
