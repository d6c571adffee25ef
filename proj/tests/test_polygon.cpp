#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "shapespline/polygon.hpp"
#include "support/generators.hpp"

using namespace shapespline;

namespace {

/// Brute-force half-plane test: some direction V has V.e >= 0 for every edge.
bool half_plane_oracle(const std::vector<Vec2>& p, int dirs = 3600) {
    for (int k = 0; k < dirs; ++k) {
        const double a = 2 * std::numbers::pi * k / dirs;
        const Vec2 V{std::cos(a), std::sin(a)};
        bool ok = true;
        for (std::size_t i = 1; i < p.size() && ok; ++i) {
            const Vec2 e = p[i] - p[i - 1];
            ok = dot(V, e) >= -1e-12 * norm(e);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

/// Strict sign changes of w.V over a dense spiral of directions.
int dense_direction_oracle(const std::vector<Vec3>& V, int count) {
    int best = 0;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double r = std::sqrt(1 - z * z);
        const Vec3 w{r * std::cos(golden * i), r * std::sin(golden * i), z};
        int changes = 0, last = 0;
        for (const auto& v : V) {
            const double d = dot(w, v);
            if (d == 0.0) continue;
            const int s = d > 0 ? 1 : -1;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        best = std::max(best, changes);
    }
    return best;
}

} // namespace

TEST(SignChanges, Examples) {
    EXPECT_EQ(sign_changes(std::vector<double>{1, -2, 3}), 2);
    EXPECT_EQ(sign_changes(std::vector<double>{1, 0, -1}), 1);
    EXPECT_EQ(sign_changes(std::vector<double>{0, 0, 0}), 0);
    EXPECT_EQ(sign_changes(std::vector<double>{1e-12, -1, 1}, 1e-9), 1);
}

TEST(RegularArc, MonotoneStaircase) {
    EXPECT_TRUE(is_regular_arc(PolyArc2({{0, 0}, {1, 0}, {1, 1}, {2, 1}})));
}

TEST(RegularArc, ShortReversalStillFitsHalfPlane) {
    // Edges (1,0) and (-1,0.1) both have non-negative dot with (0,1).
    const std::vector<Vec2> p{{0, 0}, {1, 0}, {0, 0.1}};
    EXPECT_TRUE(half_plane_oracle(p));
    EXPECT_TRUE(is_regular_arc(PolyArc2(p)));
}

TEST(RegularArc, SpiralIsNotRegular) {
    const std::vector<Vec2> p{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0.5}};
    EXPECT_FALSE(half_plane_oracle(p));
    EXPECT_FALSE(is_regular_arc(PolyArc2(p)));
}

TEST(RegularArc, ExactHalfTurnRejected) {
    EXPECT_THROW(PolyArc2({{0, 0}, {1, 0}, {1, 0}}), DegenerateInput);
    EXPECT_FALSE(is_regular_arc(PolyArc2({{0, 0}, {1, 0}, {0.5, 0}})));
}

TEST(RegularArc, AgreesWithDirectionOracle) {
    testgen::Gen g(11);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        std::vector<Vec2> p{{0, 0}};
        const int n = g.integer(2, 5);
        for (int k = 0; k < n; ++k) {
            p.push_back(p.back() + Vec2{g.uniform(-1, 1), g.uniform(-1, 1)});
        }
        // skip arcs whose widest edge-direction gap is within 0.5 degrees of pi
        std::vector<double> ang;
        for (std::size_t k = 1; k < p.size(); ++k) {
            ang.push_back(std::atan2(p[k].y - p[k - 1].y, p[k].x - p[k - 1].x));
        }
        std::sort(ang.begin(), ang.end());
        double gap = ang.front() + 2 * std::numbers::pi - ang.back();
        for (std::size_t k = 1; k < ang.size(); ++k) gap = std::max(gap, ang[k] - ang[k - 1]);
        if (std::abs(gap - std::numbers::pi) < 0.01) continue;
        ++checked;
        EXPECT_EQ(is_regular_arc(PolyArc2(p)), half_plane_oracle(p)) << "arc " << i;
    }
    EXPECT_GT(checked, 300);
}

TEST(PlanarInflection, Examples) {
    EXPECT_EQ(planar_inflection_count(PolyArc2({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 0);
    EXPECT_EQ(planar_inflection_count(PolyArc2({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}})), 2);
    EXPECT_EQ(planar_inflection_count(PolyArc2({{0, 0}, {1, 0}, {2, 0}, {3, 0}})), 0);
}

TEST(PlanarInflection, TurnSequenceOracle) {
    // The zigzag turns left, right, left: cross values 1, -1, 1.
    const PolyArc2 arc({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
    EXPECT_EQ(arc.turns(), (std::vector<double>{1, -1, 1}));
}

TEST(PlanarInflection, ReversalInvariant) {
    testgen::Gen g(12);
    for (int i = 0; i < 200; ++i) {
        std::vector<Vec2> p{{0, 0}};
        const int n = g.integer(2, 8);
        for (int k = 0; k < n; ++k) {
            p.push_back(p.back() + Vec2{g.uniform(-1, 1), g.uniform(-1, 1)});
        }
        std::vector<Vec2> r(p.rbegin(), p.rend());
        EXPECT_EQ(planar_inflection_count(PolyArc2(p)), planar_inflection_count(PolyArc2(r)));
    }
}

TEST(DataPolygon, RejectsDuplicatesAndShortInput) {
    EXPECT_THROW(DataPolygon({{0, 0, 0}}), DegenerateInput);
    EXPECT_THROW(DataPolygon({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}), DegenerateInput);
    EXPECT_THROW(DataPolygon({{0, 0, 0}, {NAN, 0, 0}}), DegenerateInput);
}

TEST(DataPolygon, CacheCoherence) {
    testgen::Gen g(13);
    for (int i = 0; i < 50; ++i) {
        const DataPolygon poly(g.polyline(g.integer(2, 9)));
        const auto chords = DataPolygon::compute_chords(poly.points());
        EXPECT_EQ(chords, poly.chords());
        EXPECT_EQ(DataPolygon::compute_binormals(chords), poly.binormals());
        EXPECT_EQ(DataPolygon::compute_torsions(chords), poly.torsions());
        for (int k = 1; k <= poly.segments(); ++k) {
            EXPECT_EQ(poly.chord(k), poly.point(k) - poly.point(k - 1));
        }
    }
}

TEST(DataPolygon, IndexRanges) {
    const DataPolygon poly({{-3, -3, -0.5}, {0, 0, 0}, {0, 0, 5}, {2, -4, 5.5}});
    EXPECT_EQ(poly.segments(), 3);
    EXPECT_THROW((void)poly.chord(0), IndexOutOfRange);
    EXPECT_THROW((void)poly.binormal(3), IndexOutOfRange);
    EXPECT_THROW((void)poly.torsion(1), IndexOutOfRange);
    EXPECT_THROW((void)classify_vertex(poly, 0), IndexOutOfRange);
}

TEST(Classify, FirstExampleIsConvex) {
    const DataPolygon poly({{-3, -3, -0.5}, {0, 0, 0}, {0, 0, 5}, {2, -4, 5.5}});
    EXPECT_EQ(poly.binormal(1), (Vec3{15, -15, 0}));
    EXPECT_EQ(poly.binormal(2), (Vec3{20, 10, 0}));
    EXPECT_DOUBLE_EQ(dot(poly.binormal(1), poly.binormal(2)), 150.0);
    EXPECT_DOUBLE_EQ(poly.torsion(2), 90.0);
    const auto f = classify_segment(poly, 2);
    EXPECT_TRUE(f.has(ShapeFlag::Convex));
    EXPECT_TRUE(f.has(ShapeFlag::Torsion));
    EXPECT_FALSE(f.has(ShapeFlag::Inflection));
}

TEST(Classify, SecondExampleIsConvex) {
    const DataPolygon poly({{-3, -3, -0.5}, {0, 0, 0}, {0, 0, 10}, {2, -4, 10.5}});
    EXPECT_EQ(poly.binormal(1), (Vec3{30, -30, 0}));
    EXPECT_EQ(poly.binormal(2), (Vec3{40, 20, 0}));
    EXPECT_DOUBLE_EQ(dot(poly.binormal(1), poly.binormal(2)), 600.0);
    EXPECT_TRUE(classify_segment(poly, 2).has(ShapeFlag::Convex));
}

TEST(Classify, CollinearVertex) {
    const DataPolygon poly({{0, 0, 0}, {1, 1, 1}, {3, 3, 3}});
    EXPECT_TRUE(classify_vertex(poly, 1).has(ShapeFlag::Collinear));
    const DataPolygon back({{0, 0, 0}, {1, 1, 1}, {0.5, 0.5, 0.5}});
    EXPECT_FALSE(classify_vertex(back, 1).has(ShapeFlag::Collinear));
}

TEST(Classify, FlagsMutuallyConsistent) {
    testgen::Gen g(14);
    for (int i = 0; i < 100; ++i) {
        auto pts = g.polyline(7);
        if (g.coin()) {
            pts[3] = pts[2] + (pts[2] - pts[1]) * 0.7;   // force a collinear vertex at 2
        }
        const DataPolygon poly(pts);
        for (int k = 2; k <= poly.segments() - 1; ++k) {
            const auto f = classify_segment(poly, k);
            EXPECT_FALSE(f.has(ShapeFlag::Convex) && f.has(ShapeFlag::Inflection));
            EXPECT_FALSE(f.has(ShapeFlag::Torsion) && f.has(ShapeFlag::Coplanar));
            const bool collinear_end = classify_vertex(poly, k - 1).has(ShapeFlag::Collinear) ||
                                       classify_vertex(poly, k).has(ShapeFlag::Collinear);
            if (collinear_end) {
                EXPECT_FALSE(f.has(ShapeFlag::Convex) || f.has(ShapeFlag::Inflection));
            }
        }
    }
}

TEST(SpatialArc, PlanarMatchesPlanarCount) {
    testgen::Gen g(15);
    for (int i = 0; i < 100; ++i) {
        std::vector<Vec3> p3{{0, 0, 0}};
        std::vector<Vec2> p2{{0, 0}};
        const int n = g.integer(2, 7);
        for (int k = 0; k < n; ++k) {
            const Vec2 d{g.uniform(-1, 1), g.uniform(-1, 1)};
            p2.push_back(p2.back() + d);
            p3.push_back({p2.back().x, p2.back().y, 0.0});
        }
        EXPECT_EQ(spatial_arc_inflection_count(DataPolygon(p3), 64), planar_inflection_count(PolyArc2(p2)));
    }
}

TEST(SpatialArc, NonCoplanarFourPointsGiveOne) {
    EXPECT_EQ(spatial_arc_inflection_count(DataPolygon({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}})), 1);
}

TEST(SpatialArc, FivePointZigzagGivesTwo) {
    const DataPolygon poly({{0, 0, 0}, {1, 0, 0}, {1, 1, 0.1}, {2, 1, 0.3}, {2, 2, 0.35}});
    EXPECT_EQ(dense_direction_oracle(poly.binormals(), 100000), 2);
    EXPECT_EQ(spatial_arc_inflection_count(poly), 2);
}

TEST(SpatialArc, AtLeastDenseSearch) {
    testgen::Gen g(16);
    for (int i = 0; i < 40; ++i) {
        const DataPolygon poly(g.polyline(g.integer(4, 7)));
        EXPECT_GE(spatial_arc_inflection_count(poly), dense_direction_oracle(poly.binormals(), 20000));
    }
}
