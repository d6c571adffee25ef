#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapespline/cubic_segment.hpp"
#include "shapespline/error.hpp"
#include "shapespline/polygon.hpp"
#include "shapespline/tolerance.hpp"
#include "shapespline/vec.hpp"

namespace shapespline {

enum class Criterion {
    Convexity,
    Inflection,
    Collinearity,
    Torsion,
    Coplanarity,
    AdjacencyCompat,
    TorsionCompat,
    CollinearityExtended,
};

[[nodiscard]] inline const char* to_string(Criterion c) {
    switch (c) {
    case Criterion::Convexity: return "convexity";
    case Criterion::Inflection: return "inflection";
    case Criterion::Collinearity: return "collinearity";
    case Criterion::Torsion: return "torsion";
    case Criterion::Coplanarity: return "coplanarity";
    case Criterion::AdjacencyCompat: return "adjacency_compat";
    case Criterion::TorsionCompat: return "torsion_compat";
    case Criterion::CollinearityExtended: return "collinearity_extended";
    }
    return "unknown";
}

struct CriterionVerdict {
    Criterion criterion{Criterion::Convexity};
    bool applicable{false};
    std::optional<bool> passed;
    std::map<std::string, double> diagnostics;

    [[nodiscard]] static CriterionVerdict not_applicable(Criterion c) { return {c, false, std::nullopt, {}}; }
    [[nodiscard]] bool failed() const { return applicable && passed.has_value() && !*passed; }

    void set(const std::string& key, double value) {
        diagnostics[key] = std::isfinite(value) ? value : 0.0;
    }
    void set_flag(const std::string& key, bool value) { diagnostics[key] = value ? 1.0 : 0.0; }
};

// ---------------------------------------------------------------------------
// Convexity

/// Which branch of the cubic convexity conditions matched for one normal.
/// Codes 11/12 are the m0 x m1 . N < 0 branches, 21/22 the > 0 branches and
/// 31/32 the degenerate m0 x m1 . N = 0 case; the second digit is 1 for the
/// pair of thresholded inequalities and 2 for the pair of sign conditions.
struct ConvexityBranch {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    int code{0};
    int orientation{0};   // +1 turns left about N, -1 turns right, 0 none matched
};

[[nodiscard]] inline ConvexityBranch convexity_branch(const CubicSegment& seg, const Vec3& N, double eps_zero) {
    const Vec3 n = normalized(N);
    const Vec3 L = seg.chord();
    const double h3 = seg.h() / 3.0;
    ConvexityBranch r;
    r.a = dot(cross(seg.m0(), seg.m1()), N);
    r.b = dot(cross(seg.m0(), L), N);
    r.c = dot(cross(L, seg.m1()), N);
    const double A = h3 * dot(cross(seg.m0(), seg.m1()), n);
    const double B = dot(cross(seg.m0(), L), n);
    const double C = dot(cross(L, seg.m1()), n);
    const double scale = h3 * norm(seg.m0()) * norm(seg.m1()) + norm(seg.m0()) * norm(L) + norm(L) * norm(seg.m1());
    const double tol = eps_zero * scale;
    const bool below = B < A - tol && C < A - tol;
    const bool above = B > A + tol && C > A + tol;
    const bool pos = B > tol && C > tol;
    const bool neg = B < -tol && C < -tol;
    if (A < -tol) {
        if (below) { r.code = 11; r.orientation = -1; }
        else if (pos) { r.code = 12; r.orientation = 1; }
    } else if (A > tol) {
        if (above) { r.code = 21; r.orientation = 1; }
        else if (neg) { r.code = 22; r.orientation = -1; }
    } else {
        if (pos) { r.code = 32; r.orientation = 1; }
        else if (neg) { r.code = 32; r.orientation = -1; }
    }
    return r;
}

namespace detail {

inline CriterionVerdict evaluate_convexity(const CubicSegment& seg, const Vec3& Nprev, const Vec3& Ncur,
                                           const Tolerances& tol) {
    CriterionVerdict v{Criterion::Convexity, true, std::nullopt, {}};
    const auto bp = convexity_branch(seg, Nprev, tol.eps_zero);
    const auto bc = convexity_branch(seg, Ncur, tol.eps_zero);
    const std::array<std::pair<const char*, const ConvexityBranch*>, 2> both{{{"prev", &bp}, {"cur", &bc}}};
    for (const auto& [tag, br] : both) {
        const std::string s(tag);
        v.set("a_" + s, br->a);
        v.set("b_" + s, br->b);
        v.set("c_" + s, br->c);
        v.set("branch_" + s, br->code);
        v.set("orientation_" + s, br->orientation);
    }
    v.set_flag("opposite_orientation_match", bp.orientation < 0 || bc.orientation < 0);
    v.passed = bp.orientation > 0 && bc.orientation > 0;
    return v;
}

} // namespace detail

/// Closed-form convexity check of a cubic segment against both adjacent
/// binormals. Applicable when Nprev . Ncur > 0.
[[nodiscard]] inline CriterionVerdict check_convexity_cubic(const CubicSegment& seg, const Vec3& Nprev,
                                                            const Vec3& Ncur, const Tolerances& tol) {
    const double ref = norm(Nprev) * norm(Ncur);
    if (!(ref > 0.0) || !(dot(Nprev, Ncur) > tol.eps_zero * ref)) {
        return CriterionVerdict::not_applicable(Criterion::Convexity);
    }
    return detail::evaluate_convexity(seg, Nprev, Ncur, tol);
}

/// The three sampled global-convexity conditions for a curve given by
/// positions, first derivatives and curvature vectors at increasing parameters.
[[nodiscard]] inline bool convexity_conditions_hold(std::span<const Vec3> pos, std::span<const Vec3> d1,
                                                    std::span<const Vec3> omega, const Vec3& N, double eps_zero) {
    if (!(norm(N) > 0.0)) {
        throw DegenerateInput("convexity test needs a non-zero normal");
    }
    const Vec3 n = normalized(N);
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (dot(omega[k], n) < -eps_zero * norm(omega[k])) {
            return false;
        }
        const Vec3 r = pos[k] - pos[0];
        if (dot(cross(r, d1[k]), n) < -eps_zero * norm(r) * norm(d1[k])) {
            return false;
        }
        if (dot(cross(d1[0], r), n) < -eps_zero * norm(r) * norm(d1[0])) {
            return false;
        }
    }
    return true;
}

/// Sampled form of the convexity criterion for one normal.
[[nodiscard]] inline bool check_convexity_sampled(const CubicSegment& seg, const Vec3& N, int samples = 512,
                                                  double eps_zero = 1e-9) {
    if (!(norm(N) > 0.0)) {
        throw DegenerateInput("convexity test needs a non-zero normal");
    }
    samples = std::max(samples, 2);
    std::vector<Vec3> pos;
    std::vector<Vec3> d1;
    std::vector<Vec3> omega;
    for (int k = 0; k < samples; ++k) {
        const double u = static_cast<double>(k) / (samples - 1);
        const auto d = seg.eval_derivatives(u);
        pos.push_back(seg.eval(u));
        d1.push_back(d.d1);
        omega.push_back(cross(d.d1, d.d2));
    }
    return convexity_conditions_hold(pos, d1, omega, N, eps_zero);
}

// ---------------------------------------------------------------------------
// Inflection

namespace detail {

inline CriterionVerdict evaluate_inflection(const CubicSegment& seg, const Vec3& Nprev, const Vec3& Ncur,
                                            const Tolerances& tol) {
    CriterionVerdict v{Criterion::Inflection, true, std::nullopt, {}};
    const auto q = seg.curvature_quad();
    const double g0p = dot(q.g0, Nprev);
    const double g0c = dot(q.g0, Ncur);
    const double g2p = dot(q.g2, Nprev);
    const double g2c = dot(q.g2, Ncur);
    const double e = tol.eps_zero;
    const double r0p = e * norm(q.g0) * norm(Nprev);
    const double r0c = e * norm(q.g0) * norm(Ncur);
    const double r2p = e * norm(q.g2) * norm(Nprev);
    const double r2c = e * norm(q.g2) * norm(Ncur);
    v.set("g0_dot_Nprev", g0p);
    v.set("g0_dot_Ncur", g0c);
    v.set("g2_dot_Nprev", g2p);
    v.set("g2_dot_Ncur", g2c);
    v.passed = g0p > r0p && g0c < -r0c && g2p < -r2p && g2c > r2c;
    return v;
}

} // namespace detail

/// Closed-form inflection check. Applicable when Nprev . Ncur < 0.
[[nodiscard]] inline CriterionVerdict check_inflection_cubic(const CubicSegment& seg, const Vec3& Nprev,
                                                             const Vec3& Ncur, const Tolerances& tol) {
    const double ref = norm(Nprev) * norm(Ncur);
    if (!(ref > 0.0) || !(dot(Nprev, Ncur) < -tol.eps_zero * ref)) {
        return CriterionVerdict::not_applicable(Criterion::Inflection);
    }
    return detail::evaluate_inflection(seg, Nprev, Ncur, tol);
}

// ---------------------------------------------------------------------------
// Torsion

namespace detail {

inline CriterionVerdict evaluate_torsion(const CubicSegment& seg, double delta, const Tolerances& tol) {
    CriterionVerdict v{Criterion::Torsion, true, std::nullopt, {}};
    const Vec3 L = seg.chord();
    const double tr = triple(seg.m0(), L, seg.m1());
    v.set("triple", tr);
    v.set("delta", delta);
    v.set("triple_times_delta", tr * delta);
    const bool nonzero = !near_zero(tr, norm(seg.m0()) * norm(L) * norm(seg.m1()), tol.eps_zero);
    v.passed = nonzero && tr * delta > 0.0;
    return v;
}

} // namespace detail

/// Sign agreement of [m0 L m1] with the discrete torsion; applicable when
/// |delta| > eps_zero.
[[nodiscard]] inline CriterionVerdict check_torsion_cubic(const CubicSegment& seg, double delta,
                                                          const Tolerances& tol) {
    if (!(std::abs(delta) > tol.eps_zero)) {
        return CriterionVerdict::not_applicable(Criterion::Torsion);
    }
    return detail::evaluate_torsion(seg, delta, tol);
}

/// Same check with the discrete torsion computed from the neighbouring chords
/// and classified relative to their lengths.
[[nodiscard]] inline CriterionVerdict check_torsion_cubic(const CubicSegment& seg, const Vec3& Lprev,
                                                          const Vec3& Lnext, const Tolerances& tol) {
    const Vec3 L = seg.chord();
    const double delta = triple(Lprev, L, Lnext);
    if (near_zero(delta, norm(Lprev) * norm(L) * norm(Lnext), tol.eps_zero)) {
        return CriterionVerdict::not_applicable(Criterion::Torsion);
    }
    return detail::evaluate_torsion(seg, delta, tol);
}

// ---------------------------------------------------------------------------
// Collinearity and coplanarity

namespace detail {

/// Largest sine between any non-zero vector in `vs` and any of `refs`.
/// The bound carries over to convex combinations of `vs` when, for every
/// ref, the vectors are all acute to it (Acute) or all on one side (OneSide).
enum class Hypothesis { Acute, OneSide };

struct SineBound {
    double sup{0.0};
    bool hypothesis{true};
    int skipped{0};
};

inline SineBound sine_bound(std::span<const Vec3> vs, std::span<const Vec3> refs, double eps_zero, Hypothesis mode) {
    SineBound r;
    double scale = 0.0;
    for (const auto& v : vs) {
        scale = std::max(scale, norm(v));
    }
    for (const auto& ref : refs) {
        int side = 0;
        for (const auto& v : vs) {
            if (!(norm(v) > eps_zero * scale) || !(norm(v) > 0.0)) {
                continue;
            }
            r.sup = std::max(r.sup, sine_angle(v, ref));
            const int s = dot(v, ref) >= 0.0 ? 1 : -1;
            if (mode == Hypothesis::Acute) {
                r.hypothesis = r.hypothesis && s > 0;
            } else {
                r.hypothesis = r.hypothesis && (side == 0 || s == side);
                side = s;
            }
        }
    }
    for (const auto& v : vs) {
        if (!(norm(v) > eps_zero * scale) || !(norm(v) > 0.0)) {
            ++r.skipped;
        }
    }
    return r;
}

inline CriterionVerdict evaluate_collinearity(const CubicSegment& seg, std::span<const Vec3> chords,
                                              const Tolerances& tol) {
    CriterionVerdict v{Criterion::Collinearity, true, std::nullopt, {}};
    const auto hod = seg.hodograph();
    const auto b = sine_bound(hod, chords, tol.eps_zero, Hypothesis::Acute);
    v.set("sup_sine", b.sup);
    v.set("eps0", tol.eps0);
    v.set_flag("hypothesis_holds", b.hypothesis && b.skipped == 0);
    v.set("zero_control_points", b.skipped);
    v.passed = b.sup < tol.eps0;
    return v;
}

inline CriterionVerdict evaluate_coplanarity(const CubicSegment& seg, const Vec3& Nprev, const Vec3& Ncur,
                                             const Tolerances& tol) {
    CriterionVerdict v{Criterion::Coplanarity, true, std::nullopt, {}};
    const auto g = seg.curvature_quad().coefficients();
    const std::array<Vec3, 2> normals{Nprev, Ncur};
    const auto b = sine_bound(g, normals, tol.eps_zero, Hypothesis::OneSide);
    v.set("sup_sine", b.sup);
    v.set("eps1", tol.eps1);
    v.set_flag("hypothesis_holds", b.hypothesis);
    v.set("zero_g_vectors", b.skipped);
    v.passed = b.sup < tol.eps1;
    return v;
}

} // namespace detail

/// Sine bound on the derivative control points against every chord in
/// `chords`. The caller decides applicability.
[[nodiscard]] inline CriterionVerdict check_collinearity_cubic(const CubicSegment& seg, std::span<const Vec3> chords,
                                                               const Tolerances& tol) {
    if (chords.empty()) {
        return CriterionVerdict::not_applicable(Criterion::Collinearity);
    }
    return detail::evaluate_collinearity(seg, chords, tol);
}

/// Applicable when Lprev and Lcur are parallel and co-directed.
[[nodiscard]] inline CriterionVerdict check_collinearity_cubic(const CubicSegment& seg, const Vec3& Lprev,
                                                               const Vec3& Lcur, const Tolerances& tol) {
    if (!near_zero(norm(cross(Lprev, Lcur)), norm(Lprev) * norm(Lcur), tol.eps_zero) || !(dot(Lprev, Lcur) > 0.0)) {
        return CriterionVerdict::not_applicable(Criterion::Collinearity);
    }
    const std::array<Vec3, 2> chords{Lprev, Lcur};
    return detail::evaluate_collinearity(seg, chords, tol);
}

/// Sine bound on the curvature coefficients against both binormals.
/// Applicable when |delta| <= eps_zero and |Nprev||Ncur| > eps_zero.
[[nodiscard]] inline CriterionVerdict check_coplanarity_cubic(const CubicSegment& seg, const Vec3& Nprev,
                                                              const Vec3& Ncur, double delta, const Tolerances& tol) {
    if (std::abs(delta) > tol.eps_zero || !(norm(Nprev) * norm(Ncur) > tol.eps_zero)) {
        return CriterionVerdict::not_applicable(Criterion::Coplanarity);
    }
    return detail::evaluate_coplanarity(seg, Nprev, Ncur, tol);
}

/// m0 = a1 L + b1 Lprev and m1 = a2 L + b2 Lnext, solved in the least-squares
/// sense; `holds` when both fits are exact to eps_zero and all four
/// coefficients are positive.
struct TangentDecomposition {
    double alpha1{0.0};
    double beta1{0.0};
    double alpha2{0.0};
    double beta2{0.0};
    double residual{0.0};
    bool holds{false};
};

[[nodiscard]] inline TangentDecomposition coplanar_tangent_decomposition(const CubicSegment& seg, const Vec3& Lprev,
                                                                        const Vec3& Lnext, double eps_zero = 1e-9) {
    const Vec3 L = seg.chord();
    auto fit = [](const Vec3& m, const Vec3& u, const Vec3& v, double& a, double& b) {
        const double uu = dot(u, u);
        const double uv = dot(u, v);
        const double vv = dot(v, v);
        const double det = uu * vv - uv * uv;
        if (!(std::abs(det) > 0.0)) {
            a = b = 0.0;
            return norm(m);
        }
        const double mu = dot(m, u);
        const double mv = dot(m, v);
        a = (mu * vv - mv * uv) / det;
        b = (mv * uu - mu * uv) / det;
        const double scale = std::max(norm(m), 1e-300);
        return norm(m - a * u - b * v) / scale;
    };
    TangentDecomposition d;
    const double r1 = fit(seg.m0(), L, Lprev, d.alpha1, d.beta1);
    const double r2 = fit(seg.m1(), L, Lnext, d.alpha2, d.beta2);
    d.residual = std::max(r1, r2);
    const double sep1 = sine_angle(L, Lprev);
    const double sep2 = sine_angle(L, Lnext);
    d.holds = sep1 > eps_zero && sep2 > eps_zero && d.residual <= std::max(eps_zero, 1e-12) * 1e3 && d.alpha1 > 0.0 &&
              d.beta1 > 0.0 && d.alpha2 > 0.0 && d.beta2 > 0.0;
    return d;
}

// ---------------------------------------------------------------------------
// Joint compatibility

/// Tangent at a joint, projected onto the plane of the two chords, must lie
/// strictly inside the turn wedge.
[[nodiscard]] inline CriterionVerdict check_adjacency_compat(const CubicSegment& prev_seg, const CubicSegment& next_seg,
                                                             const Vec3& N, const Vec3& Lprev, const Vec3& Lcur,
                                                             const Tolerances& tol = {}) {
    const Vec3 m = prev_seg.m1();
    const double mscale = std::max(norm(m), norm(next_seg.m0()));
    if (norm(m - next_seg.m0()) > tol.eps_zero * mscale) {
        throw NonC1Joint("tangents differ across the joint");
    }
    const double pscale = std::max({norm(prev_seg.p3()), norm(next_seg.p0()), norm(prev_seg.chord())});
    if (norm(prev_seg.p3() - next_seg.p0()) > tol.eps_zero * pscale) {
        throw NonC1Joint("segments do not share the joint point");
    }
    if (near_zero(norm(N), norm(Lprev) * norm(Lcur), tol.eps_zero)) {
        return CriterionVerdict::not_applicable(Criterion::AdjacencyCompat);
    }
    CriterionVerdict v{Criterion::AdjacencyCompat, true, std::nullopt, {}};
    const Vec3 mp = reject(m, N);
    const double product = dot(cross(mp, Lcur), cross(mp, Lprev));
    v.set("product", product);
    v.set("tangent_out_of_plane_sine", norm(m) > 0.0 ? std::abs(dot(normalized(m), normalized(N))) : 0.0);
    const double ref = norm2(mp) * norm(Lprev) * norm(Lcur);
    v.passed = product < -tol.eps_zero * ref;
    v.set_flag("reversed_wedge", *v.passed && dot(cross(Lprev, mp), N) < 0.0);
    return v;
}

/// Opposite discrete torsions across a joint require either a torsion jump
/// or vanishing torsion on both sides of the joint.
[[nodiscard]] inline CriterionVerdict check_torsion_compat(double delta_prev, double delta_cur, double tau_prev,
                                                           double tau_cur, const Tolerances& tol,
                                                           bool prev_torsion_ok = true, bool cur_torsion_ok = true) {
    const double prod = delta_prev * delta_cur;
    if (prod == 0.0 || !std::isfinite(prod)) {
        return CriterionVerdict::not_applicable(Criterion::TorsionCompat);
    }
    CriterionVerdict v{Criterion::TorsionCompat, true, std::nullopt, {}};
    v.set("delta_prev", delta_prev);
    v.set("delta_cur", delta_cur);
    v.set("tau_prev", tau_prev);
    v.set("tau_cur", tau_cur);
    if (prod < 0.0) {
        const bool zero = std::abs(tau_prev) <= tol.eps_zero && std::abs(tau_cur) <= tol.eps_zero;
        const double scale = std::max(std::abs(tau_prev), std::abs(tau_cur));
        const bool jump = std::abs(tau_prev - tau_cur) > tol.eps_zero * std::max(scale, 1.0);
        v.set("branch", zero ? 1 : jump ? 2 : 0);
        v.set_flag("torsion_discontinuous", jump);
        v.passed = zero || jump;
    } else {
        v.set("branch", 3);
        v.passed = prev_torsion_ok && cur_torsion_ok;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Planar cubic inflections and control-polygon geometry

struct PlanarInflection {
    int count{0};
    int sampled_count{0};
    bool regular{true};
    double ratio{0.0};   // only meaningful when !regular
};

/// Inflections of the planar cubic Bezier curve ABCD. Regular control
/// polygons use the sampled curvature sign count; polygons turning by more
/// than pi use the ratio |B-A||C-D| / (|B-P||C-P|) against 4, P = AB x CD.
[[nodiscard]] inline PlanarInflection planar_cubic_inflection(const Vec2& A, const Vec2& B, const Vec2& C,
                                                              const Vec2& D, int samples = 2048,
                                                              double eps_zero = 1e-9) {
    const PolyArc2 arc({A, B, C, D});
    PlanarInflection r;
    const Vec2 c0 = 3.0 * (B - A);
    const Vec2 c1 = 3.0 * (C - B);
    const Vec2 c2 = 3.0 * (D - C);
    std::vector<double> kappa;
    double scale = 0.0;
    samples = std::max(samples, 3);
    for (int k = 0; k < samples; ++k) {
        const double u = static_cast<double>(k) / (samples - 1);
        const Vec2 d1 = (1 - u) * (1 - u) * c0 + 2 * u * (1 - u) * c1 + u * u * c2;
        const Vec2 d2 = 2.0 * ((1 - u) * (c1 - c0) + u * (c2 - c1));
        kappa.push_back(cross(d1, d2));
        scale = std::max(scale, norm(d1) * norm(d2));
    }
    r.sampled_count = sign_changes(kappa, eps_zero * scale);
    r.regular = is_regular_arc(arc, eps_zero);
    if (r.regular) {
        r.count = r.sampled_count;
        return r;
    }
    const Vec2 u = B - A;
    const Vec2 w = D - C;
    const double den = cross(u, w);
    if (near_zero(den, norm(u) * norm(w), eps_zero)) {
        throw NoIntersection("control polygon end edges are parallel");
    }
    const double s = cross(C - A, w) / den;
    const Vec2 P = A + s * u;
    r.ratio = norm(B - A) * norm(C - D) / (norm(B - P) * norm(C - P));
    r.count = r.ratio <= 4.0 ? 0 : 2;
    return r;
}

struct LineIntersection {
    double s{0.0};
    double t{0.0};
    double sbar{0.0};
    double tbar{0.0};
};

/// Intersection of line P0P1 with line P3P2 for coplanar points with normal n:
/// P = P0 + (P1-P0)s = P3 + (P2-P3)t = P1 + (P0-P1)sbar = P2 + (P3-P2)tbar.
[[nodiscard]] inline LineIntersection intersect_lines(const Vec3& P0, const Vec3& P1, const Vec3& P2, const Vec3& P3,
                                                      const Vec3& n, double eps_zero = 1e-9) {
    if (!(norm(n) > 0.0)) {
        throw PreconditionError("line intersection needs a non-zero normal");
    }
    const Vec3 nn = normalized(n);
    for (const Vec3& d : {P1 - P0, P2 - P0, P3 - P0}) {
        if (!near_zero(dot(d, nn), norm(d), eps_zero)) {
            throw PreconditionError("points are not coplanar with the given normal");
        }
    }
    const double den = dot(cross(P1 - P0, P2 - P3), nn);
    if (near_zero(den, norm(P1 - P0) * norm(P2 - P3), eps_zero)) {
        throw NoIntersection("lines are parallel");
    }
    const double denbar = dot(cross(P0 - P1, P3 - P2), nn);
    LineIntersection r;
    r.s = dot(cross(P3 - P0, P2 - P3), nn) / den;
    r.t = -dot(cross(P1 - P0, P3 - P0), nn) / den;
    r.sbar = dot(cross(P2 - P1, P3 - P2), nn) / denbar;
    r.tbar = -dot(cross(P0 - P1, P2 - P1), nn) / denbar;
    return r;
}

/// Global convexity of the planar arc P0P1P2P3 (normal N), evaluated branch
/// by branch on the four sign conditions. Either orientation is accepted;
/// `orientation` reports which one (+1 left about N, -1 right).
struct ControlPolygonConvexity {
    bool convex{false};
    int branch{0};
    int orientation{0};
};

[[nodiscard]] inline ControlPolygonConvexity control_polygon_convexity(const Vec3& P0, const Vec3& P1, const Vec3& P2,
                                                                       const Vec3& P3, const Vec3& N,
                                                                       double eps_zero = 1e-9) {
    if (!(norm(N) > 0.0)) {
        throw PreconditionError("convexity test needs a non-zero normal");
    }
    const Vec3 n = normalized(N);
    for (const Vec3& d : {P1 - P0, P2 - P0, P3 - P0}) {
        if (!near_zero(dot(d, n), norm(d), eps_zero)) {
            throw PreconditionError("control points are not coplanar with the given normal");
        }
    }
    auto sgn = [&](const Vec3& a, const Vec3& b) {
        const double v = dot(cross(a, b), n);
        if (near_zero(v, norm(a) * norm(b), eps_zero)) {
            return 0;
        }
        return v > 0.0 ? 1 : -1;
    };
    const int ends = sgn(P1 - P0, P2 - P3);
    const int t1 = sgn(P1 - P0, P2 - P1);
    const int t2 = sgn(P2 - P1, P3 - P2);
    const int s1 = sgn(P0 - P1, P3 - P0);
    const int s2 = sgn(P3 - P0, P2 - P3);
    ControlPolygonConvexity r;
    if (ends > 0) {
        if (t1 < 0 && t2 < 0) {
            r = {true, 11, -1};
        } else if (s1 < 0 && s2 < 0) {
            r = {true, 12, 1};
        }
    } else if (ends < 0) {
        if (t1 > 0 && t2 > 0) {
            r = {true, 21, 1};
        } else if (s1 > 0 && s2 > 0) {
            r = {true, 22, -1};
        }
    }
    return r;
}

[[nodiscard]] inline bool convex_control_polygon(const Vec3& P0, const Vec3& P1, const Vec3& P2, const Vec3& P3,
                                                 const Vec3& N, double eps_zero = 1e-9) {
    return control_polygon_convexity(P0, P1, P2, P3, N, eps_zero).convex;
}

} // namespace shapespline
