#include <gtest/gtest.h>

#include <cmath>

#include "shapespline/cubic_segment.hpp"
#include "support/generators.hpp"

using namespace shapespline;
using testgen::rel_err;

namespace {

Vec3 fd1(const CubicSegment& s, double u, double du) {
    return (s.eval(u + du) - s.eval(u - du)) / (2 * du * s.h());
}
Vec3 fd2(const CubicSegment& s, double u, double du) {
    return (s.eval(u + du) - 2.0 * s.eval(u) + s.eval(u - du)) / (du * du * s.h() * s.h());
}

} // namespace

TEST(CubicEval, Endpoints) {
    testgen::Gen g(21);
    for (int i = 0; i < 50; ++i) {
        const auto s = g.segment();
        EXPECT_EQ(s.eval(0.0), s.p0());
        EXPECT_EQ(s.eval(1.0), s.p3());
    }
}

TEST(CubicEval, DegeneratePoint) {
    const Vec3 q{1.5, -2, 3};
    const auto s = CubicSegment::from_bezier(q, q, q, q, 1.0);
    EXPECT_LE(norm(s.eval(0.5) - q), 1e-15);
}

TEST(CubicEval, MatchesDeCasteljau) {
    testgen::Gen g(22);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.segment();
        for (double u : {0.0, 0.3, 0.5, 0.77, 1.0}) {
            EXPECT_LE(norm(s.eval(u) - testgen::de_casteljau(s.bezier(), u)), 1e-13);
        }
    }
}

TEST(CubicEval, DomainErrors) {
    testgen::Gen g(23);
    const auto s = g.segment();
    EXPECT_THROW((void)s.eval(-0.01), DomainError);
    EXPECT_THROW((void)s.eval_derivatives(1.5), DomainError);
    EXPECT_THROW(CubicSegment({0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}, 0.0), DomainError);
}

TEST(CubicBezier, HermiteCoherence) {
    testgen::Gen g(24);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.segment();
        const auto b = s.bezier();
        EXPECT_LE(norm(3.0 * (b[1] - b[0]) / s.h() - s.m0()), 1e-13 * (1 + norm(s.m0())));
        EXPECT_LE(norm(3.0 * (b[3] - b[2]) / s.h() - s.m1()), 1e-13 * (1 + norm(s.m1())));
        const auto r = CubicSegment::from_bezier(b[0], b[1], b[2], b[3], s.h());
        EXPECT_LE(norm(r.m0() - s.m0()), 1e-12 * (1 + norm(s.m0())));
    }
}

TEST(CubicDerivatives, HermiteEndConditions) {
    testgen::Gen g(25);
    for (int i = 0; i < 50; ++i) {
        const auto s = g.segment();
        EXPECT_LE(norm(s.eval_derivatives(0).d1 - s.m0()), 1e-13 * (1 + norm(s.m0())));
        EXPECT_LE(norm(s.eval_derivatives(1).d1 - s.m1()), 1e-13 * (1 + norm(s.m1())));
    }
}

TEST(CubicDerivatives, ThirdDerivativeConstant) {
    testgen::Gen g(26);
    for (int i = 0; i < 50; ++i) {
        const auto s = g.segment();
        const double h = s.h();
        const Vec3 expect = (6.0 / (h * h * h)) * (h * (s.m0() + s.m1()) - 2.0 * s.chord());
        for (double u : {0.0, 0.4, 1.0}) {
            EXPECT_LE(norm(s.eval_derivatives(u).d3 - expect), 1e-12 * (1 + norm(expect)));
        }
    }
}

TEST(CubicDerivatives, MatchFiniteDifferences) {
    testgen::Gen g(27);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.segment();
        const auto d = s.eval_derivatives(0.37);
        EXPECT_LE(norm(fd1(s, 0.37, 1e-5) - d.d1), 1e-6 * (1 + norm(d.d1)));
        EXPECT_LE(norm(fd2(s, 0.37, 1e-4) - d.d2), 1e-5 * (1 + norm(d.d2)));
    }
}

TEST(CurvatureQuad, StraightSegmentHasZeroCurvature) {
    const Vec3 L{1, 2, -1};
    const double h = 0.7;
    const CubicSegment s({0, 0, 0}, L, L / h, L / h, h);
    const auto q = s.curvature_quad();
    EXPECT_LE(norm(q.g0) + norm(q.g1) + norm(q.g2), 1e-13);
}

TEST(CurvatureQuad, PlanarSegmentAlongNormal) {
    const CubicSegment s({0, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, -1, 0}, 1.3);
    for (const auto& gk : s.curvature_quad().coefficients()) {
        EXPECT_EQ(gk.x, 0.0);
        EXPECT_EQ(gk.y, 0.0);
    }
}

TEST(CurvatureQuad, ReproducesCrossOfDerivatives) {
    testgen::Gen g(28);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.segment();
        const auto q = s.curvature_quad();
        for (int k = 0; k <= 32; ++k) {
            const double u = k / 32.0;
            const auto d = s.eval_derivatives(u);
            const Vec3 w = cross(d.d1, d.d2);
            EXPECT_LE(norm(q.eval(u) - w), 1e-10 * (1 + norm(d.d1) * norm(d.d2)));
        }
    }
}

TEST(CurvatureQuad, EqualsScaledQuadraticCross) {
    testgen::Gen g(29);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.segment();
        const auto hod = s.hodograph();
        const auto qc = quadratic_cross(hod[0], hod[1], hod[2]);
        const auto q = s.curvature_quad();
        for (double u : {0.0, 0.25, 0.5, 0.9, 1.0}) {
            EXPECT_LE(norm(q.eval(u) - qc.eval(u) / s.h()), 1e-10 * (1 + norm(q.eval(u))));
        }
    }
}

TEST(QuadraticCross, Examples) {
    const Vec3 c{1, 2, 3};
    const auto z = quadratic_cross(c, c, c);
    EXPECT_EQ(z.eval(0.3), (Vec3{0, 0, 0}));
    const Vec3 c0{1, 0, 0}, c1{0, 1, 0}, c2{-1, 0, 0};
    EXPECT_EQ(quadratic_cross(c0, c1, c2).eval(0.0), 2.0 * cross(c0, c1));
}

TEST(QuadraticCross, PointwiseAgainstDirectEvaluation) {
    testgen::Gen g(30);
    for (int i = 0; i < 200; ++i) {
        const Vec3 c0 = g.vec(), c1 = g.vec(), c2 = g.vec();
        const auto q = quadratic_cross(c0, c1, c2);
        for (int k = 1; k <= 9; ++k) {
            const double t = k / 10.0;
            const Vec3 c = (1 - t) * (1 - t) * c0 + 2 * t * (1 - t) * c1 + t * t * c2;
            const Vec3 dc = 2.0 * ((1 - t) * (c1 - c0) + t * (c2 - c1));
            EXPECT_LE(norm(q.eval(t) - cross(c, dc)), 1e-12 * 10);
        }
    }
}

TEST(CurvatureQuad, DotWithFixedVectorIsQuadratic) {
    testgen::Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.segment();
        const Vec3 w = g.unit();
        auto f = [&](double u) {
            const auto d = s.eval_derivatives(u);
            return dot(cross(d.d1, d.d2), w);
        };
        // Lagrange quadratic through u = 0, 0.5, 1
        const double f0 = f(0), f1 = f(0.5), f2 = f(1);
        double scale = std::abs(f0) + std::abs(f1) + std::abs(f2) + 1;
        for (int k = 0; k < 30; ++k) {
            const double u = (k + 0.5) / 30.0;
            const double p = f0 * (u - 0.5) * (u - 1) / 0.5 + f1 * u * (u - 1) / -0.25 + f2 * u * (u - 0.5) / 0.5;
            EXPECT_LE(std::abs(p - f(u)), 1e-9 * scale);
        }
    }
}

TEST(TorsionNumerator, CoplanarIsZero) {
    const CubicSegment s({0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}, 1.0);
    EXPECT_EQ(s.torsion_numerator(), 0.0);
}

TEST(TorsionNumerator, CatmullRomTangentsGiveDiscreteTorsion) {
    testgen::Gen g(32);
    for (int i = 0; i < 100; ++i) {
        const Vec3 Lp = g.vec(), L = g.vec(), Ln = g.vec();
        const double h = g.uniform(0.5, 2);
        const CubicSegment s({0, 0, 0}, L, Lp + L, L + Ln, h);
        const double expect = 12.0 / std::pow(h, 4) * triple(Lp, L, Ln);
        EXPECT_LE(rel_err(s.torsion_numerator(), expect), 1e-12);
    }
}

TEST(TorsionNumerator, ConstantDeterminantOfDerivatives) {
    testgen::Gen g(33);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.segment();
        const double tau = s.torsion_numerator();
        for (int k = 0; k <= 32; ++k) {
            const auto d = s.eval_derivatives(k / 32.0);
            const double det = testgen::det3(d.d1, d.d2, d.d3);
            const double scale = norm(d.d1) * norm(d.d2) * norm(d.d3);
            EXPECT_LE(std::abs(det - tau), 1e-9 * scale);
        }
    }
}

TEST(Projection, InPlaneSegmentUnchanged) {
    const CubicSegment s({0, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, -1, 0}, 1.3);
    const auto p = s.project(Plane(Vec3{0, 0, 2}, 0.0));
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(p.bezier()[static_cast<std::size_t>(k)], s.bezier()[static_cast<std::size_t>(k)]);
    }
}

TEST(Projection, LiftedPlanarSegmentReturns) {
    const CubicSegment flat({0, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, -1, 0}, 1.3);
    const CubicSegment lifted({0, 0, 4}, {2, 1, 4}, {1, 2, 0}, {1, -1, 0}, 1.3);
    const auto p = lifted.project(Plane(Vec3{0, 0, 1}, 0.0));
    for (double u : {0.0, 0.3, 0.8, 1.0}) {
        EXPECT_LE(norm(p.eval(u) - flat.eval(u)), 1e-14);
    }
}

TEST(Projection, CommutesWithEvaluation) {
    testgen::Gen g(34);
    for (int i = 0; i < 100; ++i) {
        const auto s = g.segment();
        const Plane pl(g.vec(), g.uniform(-1, 1));
        const auto p = s.project(pl);
        for (int k = 0; k <= 16; ++k) {
            const double u = k / 16.0;
            EXPECT_LE(norm(p.eval(u) - project_point(s.eval(u), pl)), 1e-12 * (1 + norm(s.eval(u))));
        }
    }
}

TEST(Projection, CurvatureAlongNormalPreserved) {
    testgen::Gen g(35);
    for (int i = 0; i < 200; ++i) {
        const auto s = g.segment();
        const Vec3 N = g.vec();
        const auto p = s.project(Plane(N, g.uniform(-1, 1)));
        const auto d0 = s.eval_derivatives(0);
        for (int k = 0; k <= 32; ++k) {
            const double u = k / 32.0;
            const auto d = s.eval_derivatives(u);
            const auto dp = p.eval_derivatives(u);
            const double a = dot(cross(dp.d1, dp.d2), N);
            const double b = dot(cross(d.d1, d.d2), N);
            EXPECT_LE(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(b)));
            const Vec3 r = s.eval(u) - s.eval(0);
            const Vec3 rp = p.eval(u) - p.eval(0);
            const double c1 = dot(cross(rp, dp.d1), N);
            const double c0 = dot(cross(r, d.d1), N);
            EXPECT_LE(std::abs(c1 - c0), 1e-9 * std::max(1.0, std::abs(c0)));
            const double e1 = dot(cross(p.eval_derivatives(0).d1, rp), N);
            const double e0 = dot(cross(d0.d1, r), N);
            EXPECT_LE(std::abs(e1 - e0), 1e-9 * std::max(1.0, std::abs(e0)));
        }
    }
}
