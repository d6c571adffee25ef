#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "shapespline/criteria.hpp"
#include "shapespline/cubic_segment.hpp"
#include "shapespline/error.hpp"
#include "shapespline/polygon.hpp"
#include "shapespline/tolerance.hpp"
#include "shapespline/vec.hpp"

namespace shapespline {

enum class TangentMode { CatmullRom, Provided };
enum class Parameterization { Uniform, ChordLength };

[[nodiscard]] inline const char* to_string(TangentMode m) {
    return m == TangentMode::CatmullRom ? "catmull-rom" : "provided";
}
[[nodiscard]] inline const char* to_string(Parameterization p) {
    return p == Parameterization::Uniform ? "uniform" : "chord";
}

struct SplineConfig {
    TangentMode tangent_mode{TangentMode::CatmullRom};
    double tension{0.5};
    Parameterization parameterization{Parameterization::ChordLength};
    Tolerances tolerances{};
    int samples{512};       // per-segment samples for sampled checks
    int directions{2048};   // sphere directions for inflection counts

    void validate() const {
        if (!std::isfinite(tension) || !(tension > 0.0)) {
            throw DomainError("tension must be positive");
        }
        if (samples < 2) {
            throw DomainError("samples must be at least 2");
        }
        if (directions < 16) {
            throw DomainError("directions must be at least 16");
        }
        tolerances.validate();
    }
};

/// C1 piecewise cubic through the data points; segment k (1-based) spans
/// [knots[k-1], knots[k]].
class Spline {
public:
    Spline(DataPolygon polygon, std::vector<double> knots, std::vector<Vec3> tangents)
        : polygon_(std::move(polygon)), knots_(std::move(knots)), tangents_(std::move(tangents)) {
        const auto n = static_cast<std::size_t>(polygon_.segments());
        if (knots_.size() != n + 1) {
            throw DegenerateInput("expected " + std::to_string(n + 1) + " knots, got " + std::to_string(knots_.size()));
        }
        if (tangents_.size() != n + 1) {
            throw DegenerateInput("expected " + std::to_string(n + 1) + " tangents, got " +
                                  std::to_string(tangents_.size()));
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (!std::isfinite(knots_[k])) {
                throw DegenerateInput("knot values must be finite");
            }
            require_finite(tangents_[k], "tangent");
        }
        for (std::size_t k = 1; k <= n; ++k) {
            const double h = knots_[k] - knots_[k - 1];
            if (!(h > 0.0)) {
                throw DegenerateInput("knots must be strictly increasing");
            }
            segments_.emplace_back(polygon_.points()[k - 1], polygon_.points()[k], tangents_[k - 1], tangents_[k], h);
        }
    }

    [[nodiscard]] const DataPolygon& polygon() const noexcept { return polygon_; }
    [[nodiscard]] const std::vector<double>& knots() const noexcept { return knots_; }
    [[nodiscard]] const std::vector<Vec3>& tangents() const noexcept { return tangents_; }
    [[nodiscard]] const std::vector<CubicSegment>& segments() const noexcept { return segments_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(segments_.size()); }

    /// Segment k, 1-based.
    [[nodiscard]] const CubicSegment& segment(int k) const {
        if (k < 1 || k > size()) {
            throw IndexOutOfRange("segment " + std::to_string(k) + " out of range");
        }
        return segments_[static_cast<std::size_t>(k - 1)];
    }

    /// Segment index and local parameter for a global t.
    [[nodiscard]] std::pair<int, double> locate(double t) const {
        if (!(t >= knots_.front() && t <= knots_.back())) {
            throw DomainError("parameter " + std::to_string(t) + " outside the knot range");
        }
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        int k = static_cast<int>(it - knots_.begin());
        k = std::clamp(k, 1, size());
        const double h = knots_[static_cast<std::size_t>(k)] - knots_[static_cast<std::size_t>(k - 1)];
        const double u = std::clamp((t - knots_[static_cast<std::size_t>(k - 1)]) / h, 0.0, 1.0);
        return {k, u};
    }

    [[nodiscard]] Vec3 eval(double t) const {
        const auto [k, u] = locate(t);
        return segment(k).eval(u);
    }

    [[nodiscard]] Derivatives eval_derivatives(double t) const {
        const auto [k, u] = locate(t);
        return segment(k).eval_derivatives(u);
    }

private:
    DataPolygon polygon_;
    std::vector<double> knots_;
    std::vector<Vec3> tangents_;
    std::vector<CubicSegment> segments_;
};

/// Knots t_0 = 0, t_k = t_{k-1} + h_k with h_k = 1 (uniform) or
/// h_k = n |L_k| / sum |L| (chord length, normalized to total width n).
[[nodiscard]] inline std::vector<double> make_knots(const DataPolygon& poly, Parameterization p) {
    const int n = poly.segments();
    std::vector<double> knots{0.0};
    double total = 0.0;
    for (const auto& L : poly.chords()) {
        total += norm(L);
    }
    for (int k = 1; k <= n; ++k) {
        const double h = p == Parameterization::Uniform ? 1.0 : n * norm(poly.chord(k)) / total;
        knots.push_back(knots.back() + h);
    }
    return knots;
}

/// Catmull-Rom tangents tension * (x_{i+1} - x_{i-1}); one-sided
/// tension * 2 L at the two ends.
[[nodiscard]] inline std::vector<Vec3> catmull_rom_tangents(const DataPolygon& poly, double tension) {
    const int n = poly.segments();
    const auto& x = poly.points();
    std::vector<Vec3> m;
    m.push_back(tension * 2.0 * poly.chord(1));
    for (int i = 1; i < n; ++i) {
        m.push_back(tension * (x[static_cast<std::size_t>(i + 1)] - x[static_cast<std::size_t>(i - 1)]));
    }
    m.push_back(tension * 2.0 * poly.chord(n));
    return m;
}

[[nodiscard]] inline Spline build_spline(const DataPolygon& polygon, const SplineConfig& cfg,
                                         const std::optional<std::vector<Vec3>>& provided_tangents = std::nullopt,
                                         const std::optional<std::vector<double>>& knots = std::nullopt) {
    cfg.validate();
    std::vector<Vec3> tangents;
    if (cfg.tangent_mode == TangentMode::Provided) {
        if (!provided_tangents) {
            throw DegenerateInput("provided tangent mode requires tangents");
        }
        tangents = *provided_tangents;
    } else {
        tangents = catmull_rom_tangents(polygon, cfg.tension);
    }
    return {polygon, knots ? *knots : make_knots(polygon, cfg.parameterization), std::move(tangents)};
}

// ---------------------------------------------------------------------------
// Sampling

struct SampleRow {
    int segment{0};
    double t{0.0};
    Vec3 position;
    Vec3 omega;
    double tau_num{0.0};
};

/// per_segment uniform samples of every segment, endpoints included.
[[nodiscard]] inline std::vector<SampleRow> sample_spline(const Spline& spline, int per_segment) {
    if (per_segment < 2) {
        throw DomainError("per-segment sample count must be at least 2");
    }
    std::vector<SampleRow> rows;
    for (int k = 1; k <= spline.size(); ++k) {
        const auto& seg = spline.segment(k);
        const double t0 = spline.knots()[static_cast<std::size_t>(k - 1)];
        const double tau = seg.torsion_numerator();
        for (int j = 0; j < per_segment; ++j) {
            const double u = static_cast<double>(j) / (per_segment - 1);
            const auto d = seg.eval_derivatives(u);
            rows.push_back({k, t0 + u * seg.h(), seg.eval(u), cross(d.d1, d.d2), tau});
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Collinearity with neighbourhood conditions

/// Checks at collinear vertex v on the built spline: (a) tangent sine bound on
/// the window around t_v, (b) curvature signs at the neighbouring data points,
/// (c) the tangent cross-sign conditions there, (d) sampled convexity or a
/// single curvature sign change between x_{v-1} and x_{v+1}. (b)-(d) apply
/// only where the neighbouring binormals are non-degenerate.
[[nodiscard]] inline CriterionVerdict check_collinearity_extended(const Spline& spline, int v, const Tolerances& tol,
                                                                  int samples = 512) {
    const auto& poly = spline.polygon();
    if (!poly.has_binormal(v)) {
        throw IndexOutOfRange("vertex " + std::to_string(v) + " is not interior");
    }
    if (!classify_vertex(poly, v, tol.eps_zero).has(ShapeFlag::Collinear)) {
        return CriterionVerdict::not_applicable(Criterion::CollinearityExtended);
    }
    CriterionVerdict out{Criterion::CollinearityExtended, true, std::nullopt, {}};
    const double e = tol.eps_zero;
    const double f = tol.eta_fraction;
    samples = std::max(samples, 3);
    const CubicSegment& left = spline.segment(v);
    const CubicSegment& right = spline.segment(v + 1);
    const Vec3& Lv = poly.chord(v);
    const Vec3& Lw = poly.chord(v + 1);

    // (a)
    double sup = 0.0;
    double dscale = std::max({norm(left.m0()), norm(left.m1()), norm(right.m1())});
    auto window_sine = [&](const CubicSegment& seg, double ua, double ub) {
        for (int j = 0; j < samples; ++j) {
            const double u = ua + (ub - ua) * j / (samples - 1);
            const Vec3 d1 = seg.eval_derivatives(u).d1;
            if (norm(d1) > e * dscale && norm(d1) > 0.0) {
                sup = std::max({sup, sine_angle(d1, Lv), sine_angle(d1, Lw)});
            }
        }
    };
    window_sine(left, 1.0 - f, 1.0);
    window_sine(right, 0.0, f);
    out.set("sup_sine", sup);
    bool ok = sup < tol.eps0;
    out.set_flag("sine_bound", sup < tol.eps0);

    const double diag = poly.bbox_diagonal();
    out.set_flag("interpolates_vertex", norm(left.p3() - poly.point(v)) <= e * std::max(diag, 1e-300));

    const bool has_prev = poly.has_binormal(v - 1) && !poly.binormal_degenerate(v - 1, e);
    const bool has_next = poly.has_binormal(v + 1) && !poly.binormal_degenerate(v + 1, e);

    // (b), (c)
    if (has_prev) {
        const Vec3& N = poly.binormal(v - 1);
        const auto d = left.eval_derivatives(0.0);
        const Vec3 w = cross(d.d1, d.d2);
        const bool curv = dot(w, N) >= -e * norm(w) * norm(N);
        const double prod = dot(cross(d.d1, poly.chord(v - 1)), cross(d.d1, Lv));
        const bool tang = prod < 0.0;
        out.set("omega_dot_N_prev", dot(w, N));
        out.set("tangent_product_prev", prod);
        ok = ok && curv && tang;
    }
    if (has_next) {
        const Vec3& N = poly.binormal(v + 1);
        const auto d = right.eval_derivatives(1.0);
        const Vec3 w = cross(d.d1, d.d2);
        const bool curv = dot(w, N) >= -e * norm(w) * norm(N);
        const double prod = dot(cross(d.d1, Lw), cross(d.d1, poly.chord(v + 2)));
        const bool tang = prod < 0.0;
        out.set("omega_dot_N_next", dot(w, N));
        out.set("tangent_product_next", prod);
        ok = ok && curv && tang;
    }

    // (d)
    if (has_prev && has_next) {
        const Vec3& Np = poly.binormal(v - 1);
        const Vec3& Nn = poly.binormal(v + 1);
        std::vector<Vec3> pos;
        std::vector<Vec3> d1;
        std::vector<Vec3> omega;
        std::vector<double> ts;
        const double tv = spline.knots()[static_cast<std::size_t>(v)];
        for (int side = 0; side < 2; ++side) {
            const CubicSegment& seg = side == 0 ? left : right;
            const double t0 = spline.knots()[static_cast<std::size_t>(v - 1 + side)];
            for (int j = side; j < samples; ++j) {
                const double u = static_cast<double>(j) / (samples - 1);
                const auto d = seg.eval_derivatives(u);
                pos.push_back(seg.eval(u));
                d1.push_back(d.d1);
                omega.push_back(cross(d.d1, d.d2));
                ts.push_back(t0 + u * seg.h());
            }
        }
        if (dot(Np, Nn) > 0.0) {
            out.set("neighbourhood", 1);
            const bool conv = convexity_conditions_hold(pos, d1, omega, Np, e) &&
                              convexity_conditions_hold(pos, d1, omega, Nn, e);
            out.set_flag("neighbourhood_convex", conv);
            ok = ok && conv;
        } else {
            out.set("neighbourhood", -1);
            const Vec3 n = normalized(Np);
            double scale = 0.0;
            for (const auto& w : omega) {
                scale = std::max(scale, norm(w));
            }
            int changes = 0;
            int last = 0;
            double t_last = ts.front();
            double where = tv;
            for (std::size_t k = 0; k < omega.size(); ++k) {
                const double val = dot(omega[k], n);
                if (std::abs(val) <= e * scale) {
                    continue;
                }
                const int s = val > 0.0 ? 1 : -1;
                if (last != 0 && s != last) {
                    ++changes;
                    where = 0.5 * (t_last + ts[k]);
                }
                last = s;
                t_last = ts[k];
            }
            const double lo = tv - f * left.h();
            const double hi = tv + f * right.h();
            const bool located = where >= lo && where <= hi;
            out.set("sign_changes", changes);
            out.set("sign_change_t", where);
            ok = ok && changes == 1 && located;
        }
    }
    out.passed = ok;
    return out;
}

// ---------------------------------------------------------------------------
// Analysis

struct VertexReport {
    int index{0};
    ShapeFlags flags;
    std::optional<Vec3> N;
    std::optional<double> delta;
};

struct SegmentReport {
    int index{0};
    ShapeFlags flags;
    std::vector<CriterionVerdict> verdicts;
};

struct JointReport {
    int index{0};
    CriterionVerdict adjacency;
    CriterionVerdict torsion_compat;
    CriterionVerdict collinearity_extended;
};

struct ReportSummary {
    int applicable{0};
    int passed{0};
    int failed{0};

    [[nodiscard]] bool all_passed() const { return failed == 0; }
};

struct SplineReport {
    std::vector<VertexReport> vertices;
    std::vector<SegmentReport> segments;
    std::vector<JointReport> joints;
    ReportSummary summary;
};

/// Geometric torsion at u scaled by a length, or 0 where the curvature
/// vector vanishes relative to the derivatives.
[[nodiscard]] inline double scaled_torsion(const CubicSegment& seg, double u, double length, double eps_zero) {
    const auto d = seg.eval_derivatives(u);
    const Vec3 w = cross(d.d1, d.d2);
    if (near_zero(norm(w), norm(d.d1) * norm(d.d2), eps_zero) || !(norm(w) > 0.0)) {
        return 0.0;
    }
    return length * seg.torsion_numerator() / norm2(w);
}

/// Runs every criterion on every segment and joint.
[[nodiscard]] inline SplineReport analyze(const Spline& spline, const SplineConfig& cfg) {
    const auto& poly = spline.polygon();
    const auto& tol = cfg.tolerances;
    const double e = tol.eps_zero;
    const int n = poly.segments();
    SplineReport rep;

    for (int v = 0; v <= n; ++v) {
        VertexReport vr;
        vr.index = v;
        if (poly.has_binormal(v)) {
            vr.flags = classify_vertex(poly, v, e);
            vr.N = poly.binormal(v);
        }
        if (poly.has_torsion(v)) {
            vr.delta = poly.torsion(v);
        }
        rep.vertices.push_back(vr);
    }

    for (int k = 1; k <= n; ++k) {
        SegmentReport sr;
        sr.index = k;
        sr.flags = classify_segment(poly, k, e);
        const CubicSegment& seg = spline.segment(k);

        if (sr.flags.has(ShapeFlag::Convex)) {
            sr.verdicts.push_back(detail::evaluate_convexity(seg, poly.binormal(k - 1), poly.binormal(k), tol));
        } else {
            sr.verdicts.push_back(CriterionVerdict::not_applicable(Criterion::Convexity));
        }
        if (sr.flags.has(ShapeFlag::Inflection)) {
            sr.verdicts.push_back(detail::evaluate_inflection(seg, poly.binormal(k - 1), poly.binormal(k), tol));
        } else {
            sr.verdicts.push_back(CriterionVerdict::not_applicable(Criterion::Inflection));
        }

        std::vector<Vec3> chords;
        if (poly.has_binormal(k - 1) && classify_vertex(poly, k - 1, e).has(ShapeFlag::Collinear)) {
            chords.push_back(poly.chord(k - 1));
            chords.push_back(poly.chord(k));
        }
        if (poly.has_binormal(k) && classify_vertex(poly, k, e).has(ShapeFlag::Collinear)) {
            if (chords.empty()) {
                chords.push_back(poly.chord(k));
            }
            chords.push_back(poly.chord(k + 1));
        }
        sr.verdicts.push_back(check_collinearity_cubic(seg, chords, tol));

        if (sr.flags.has(ShapeFlag::Torsion)) {
            sr.verdicts.push_back(detail::evaluate_torsion(seg, poly.torsion(k), tol));
        } else {
            sr.verdicts.push_back(CriterionVerdict::not_applicable(Criterion::Torsion));
        }
        if (sr.flags.has(ShapeFlag::Coplanar)) {
            auto v = detail::evaluate_coplanarity(seg, poly.binormal(k - 1), poly.binormal(k), tol);
            const auto alt = coplanar_tangent_decomposition(seg, poly.chord(k - 1), poly.chord(k + 1), e);
            v.set_flag("alt_decomposition_holds", alt.holds);
            v.set("alt_alpha1", alt.alpha1);
            v.set("alt_beta1", alt.beta1);
            v.set("alt_alpha2", alt.alpha2);
            v.set("alt_beta2", alt.beta2);
            sr.verdicts.push_back(std::move(v));
        } else {
            sr.verdicts.push_back(CriterionVerdict::not_applicable(Criterion::Coplanarity));
        }
        rep.segments.push_back(std::move(sr));
    }

    const double length = poly.bbox_diagonal();
    for (int v = 1; v < n; ++v) {
        JointReport jr;
        jr.index = v;
        jr.adjacency = check_adjacency_compat(spline.segment(v), spline.segment(v + 1), poly.binormal(v),
                                              poly.chord(v), poly.chord(v + 1), tol);
        const auto& fp = rep.segments[static_cast<std::size_t>(v - 1)];
        const auto& fc = rep.segments[static_cast<std::size_t>(v)];
        if (fp.flags.has(ShapeFlag::Torsion) && fc.flags.has(ShapeFlag::Torsion)) {
            const auto& tp = fp.verdicts[3];
            const auto& tc = fc.verdicts[3];
            jr.torsion_compat = check_torsion_compat(
                poly.torsion(v), poly.torsion(v + 1), scaled_torsion(spline.segment(v), 1.0, length, e),
                scaled_torsion(spline.segment(v + 1), 0.0, length, e), tol, tp.passed.value_or(false),
                tc.passed.value_or(false));
        } else {
            jr.torsion_compat = CriterionVerdict::not_applicable(Criterion::TorsionCompat);
        }
        jr.collinearity_extended = check_collinearity_extended(spline, v, tol, cfg.samples);
        rep.joints.push_back(std::move(jr));
    }

    auto tally = [&](const CriterionVerdict& v) {
        if (!v.applicable) {
            return;
        }
        ++rep.summary.applicable;
        if (v.passed.value_or(false)) {
            ++rep.summary.passed;
        } else {
            ++rep.summary.failed;
        }
    };
    for (const auto& s : rep.segments) {
        for (const auto& v : s.verdicts) {
            tally(v);
        }
    }
    for (const auto& j : rep.joints) {
        tally(j.adjacency);
        tally(j.torsion_compat);
        tally(j.collinearity_extended);
    }
    return rep;
}

} // namespace shapespline
