#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "shapespline/criteria.hpp"
#include "shapespline/oracle.hpp"
#include "shapespline/spline.hpp"

namespace shapespline {

struct Disagreement {
    std::string scope;   // "segment" or "joint"
    int index{0};
    std::string check;
    std::string detail;
};

struct VerificationResult {
    int checks{0};
    std::vector<Disagreement> disagreements;

    [[nodiscard]] bool ok() const { return disagreements.empty(); }
};

/// Seed for randomized self-checks: SHAPESPLINE_SEED if set and numeric.
[[nodiscard]] inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240611U) {
    const char* s = std::getenv("SHAPESPLINE_SEED");
    if (s == nullptr || *s == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : fallback;
}

namespace detail {

inline bool close_vec(const Vec3& a, const Vec3& b, double scale, double rel) {
    return norm(a - b) <= rel * std::max(scale, 1e-300);
}

} // namespace detail

/// Cross-checks the closed-form quantities and verdicts of `report` against
/// the sampling oracle. Verdict checks are one-directional where the
/// closed-form condition is only sufficient.
[[nodiscard]] inline VerificationResult verify_spline(const Spline& spline, const SplineReport& report,
                                                      const SplineConfig& cfg, std::uint64_t seed) {
    VerificationResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    const auto& poly = spline.polygon();
    const double e = cfg.tolerances.eps_zero;
    const int samples = std::max(cfg.samples, 8);
    auto fail = [&](std::string scope, int idx, std::string check, std::string detail) {
        res.disagreements.push_back({std::move(scope), idx, std::move(check), std::move(detail)});
    };

    for (const auto& sr : report.segments) {
        const int k = sr.index;
        const CubicSegment& seg = spline.segment(k);
        const oracle::PowerCubic pc(seg.bezier(), seg.h());

        // closed-form curvature and torsion numerator against direct derivatives
        ++res.checks;
        const auto quad = seg.curvature_quad();
        double wscale = 0.0;
        for (int j = 0; j <= 8; ++j) {
            const double d1 = norm(pc.d1(j / 8.0));
            wscale = std::max(wscale, d1 * std::max(norm(pc.d2(j / 8.0)), d1 / seg.h()));
        }
        for (int j = 0; j <= 8; ++j) {
            const double u = j / 8.0;
            if (!detail::close_vec(quad.eval(u), pc.omega(u), wscale, 1e-8)) {
                fail("segment", k, "curvature", "closed-form curvature differs at u=" + std::to_string(u));
                break;
            }
        }
        ++res.checks;
        const double det = triple(pc.d1(0.5), pc.d2(0.5), pc.d3());
        const double dscale = norm(pc.d1(0.5)) * norm(pc.d2(0.5)) * norm(pc.d3());
        if (std::abs(det - seg.torsion_numerator()) > 1e-8 * std::max(dscale, 1e-300)) {
            fail("segment", k, "torsion_numerator", "closed-form torsion numerator differs");
        }

        const CriterionVerdict& conv = sr.verdicts[0];
        if (conv.applicable && conv.passed.value_or(false)) {
            ++res.checks;
            const auto curve = oracle::SampledCurve::from([&](double u) { return pc.position(u); }, 0.0, 1.0, samples);
            for (const Vec3& N : {poly.binormal(k - 1), poly.binormal(k)}) {
                if (!oracle::sampled_global_convexity(curve, N, e)) {
                    fail("segment", k, "convexity", "closed form passed but sampled projection is not convex");
                    break;
                }
            }
        }

        const CriterionVerdict& infl = sr.verdicts[1];
        if (infl.applicable && infl.passed.value_or(false)) {
            ++res.checks;
            const Vec3 Np = poly.binormal(k - 1);
            const Vec3 Nc = poly.binormal(k);
            std::vector<Vec3> dirs{Np, Nc};
            for (int r = 0; r < 8; ++r) {
                const double lambda = unit(rng);
                const double mu = -unit(rng);
                dirs.push_back(lambda * normalized(Np) + mu * normalized(Nc));
            }
            for (const auto& w : dirs) {
                if (!(norm(w) > 0.0)) {
                    continue;
                }
                const int c = oracle::sampled_sign_changes([&](double u) { return dot(pc.omega(u), w); }, 0.0, 1.0,
                                                           samples, e);
                if (c != 1) {
                    fail("segment", k, "inflection",
                         "closed form passed but sampled sign changes = " + std::to_string(c));
                    break;
                }
            }
        }

        const CriterionVerdict& coll = sr.verdicts[2];
        if (coll.applicable && coll.passed.value_or(false) && coll.diagnostics.at("hypothesis_holds") > 0.0) {
            ++res.checks;
            std::vector<Vec3> chords;
            for (int v : {k - 1, k}) {
                if (poly.has_binormal(v) && classify_vertex(poly, v, e).has(ShapeFlag::Collinear)) {
                    chords.push_back(poly.chord(v));
                    chords.push_back(poly.chord(v + 1));
                }
            }
            const double sup = oracle::sampled_sine_sup([&](double u) { return pc.d1(u); }, chords, samples, e);
            if (!(sup < cfg.tolerances.eps0)) {
                fail("segment", k, "collinearity", "sampled tangent sine " + std::to_string(sup) + " exceeds bound");
            }
        }

        const CriterionVerdict& tors = sr.verdicts[3];
        if (tors.applicable) {
            ++res.checks;
            const bool oracle_ok =
                !(std::abs(det) <= e * dscale) && det * poly.torsion(k) > 0.0;
            if (oracle_ok != tors.passed.value_or(false)) {
                fail("segment", k, "torsion", "sign of sampled torsion disagrees with verdict");
            }
        }

        const CriterionVerdict& copl = sr.verdicts[4];
        if (copl.applicable && copl.passed.value_or(false) && copl.diagnostics.at("hypothesis_holds") > 0.0) {
            ++res.checks;
            const std::vector<Vec3> normals{poly.binormal(k - 1), poly.binormal(k)};
            const double sup = oracle::sampled_sine_sup([&](double u) { return pc.omega(u); }, normals, samples, e);
            if (!(sup < cfg.tolerances.eps1)) {
                fail("segment", k, "coplanarity", "sampled binormal sine " + std::to_string(sup) + " exceeds bound");
            }
        }

        // a curve with non-vanishing torsion is not planar and must inflect in some view
        if (!(std::abs(det) <= 1e-6 * dscale)) {
            ++res.checks;
            const int count = oracle::projected_inflection_count(pc, cfg.directions, samples, e);
            if (count < 1) {
                fail("segment", k, "spatial_inflection", "non-planar segment shows no inflection in any view");
            }
        }
    }

    for (const auto& jr : report.joints) {
        const int v = jr.index;
        const oracle::PowerCubic a(spline.segment(v).bezier(), spline.segment(v).h());
        const oracle::PowerCubic b(spline.segment(v + 1).bezier(), spline.segment(v + 1).h());
        ++res.checks;
        const Vec3 ta = a.d1(1.0);
        const Vec3 tb = b.d1(0.0);
        if (!detail::close_vec(ta, tb, std::max(norm(ta), norm(tb)), 1e-9)) {
            fail("joint", v, "c1", "tangents differ across the joint");
        }
        if (jr.adjacency.applicable) {
            ++res.checks;
            const Vec3 N = poly.binormal(v);
            const Vec3 n = normalized(N);
            const Vec3 mp = ta - dot(ta, n) * n;
            const double s1 = dot(cross(poly.chord(v), mp), n);
            const double s2 = dot(cross(mp, poly.chord(v + 1)), n);
            const double ref = norm(mp) * std::max(norm(poly.chord(v)), norm(poly.chord(v + 1)));
            if (std::abs(s1) > 1e-7 * ref && std::abs(s2) > 1e-7 * ref) {
                const bool inside = s1 > 0.0 && s2 > 0.0;
                if (inside != jr.adjacency.passed.value_or(false)) {
                    fail("joint", v, "adjacency_compat", "wedge test disagrees with verdict");
                }
            }
        }
        if (jr.torsion_compat.applicable) {
            ++res.checks;
            const double length = poly.bbox_diagonal();
            auto tau = [&](const oracle::PowerCubic& c, double u) {
                const Vec3 w = c.omega(u);
                if (!(norm(w) > e * norm(c.d1(u)) * norm(c.d2(u)))) {
                    return 0.0;
                }
                return length * triple(c.d1(u), c.d2(u), c.d3()) / norm2(w);
            };
            const double tp = tau(a, 1.0);
            const double tc = tau(b, 0.0);
            const auto& d = jr.torsion_compat.diagnostics;
            auto near = [](double x, double y) { return std::abs(x - y) <= 1e-7 * std::max({1.0, std::abs(x), std::abs(y)}); };
            if (!near(tp, d.at("tau_prev")) || !near(tc, d.at("tau_cur"))) {
                fail("joint", v, "torsion_compat", "joint torsion values disagree");
            }
        }
    }
    return res;
}

} // namespace shapespline
