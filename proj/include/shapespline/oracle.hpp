#pragma once

// Brute-force verifiers. Nothing here calls the closed-form derivative,
// curvature or criterion code; curves are rebuilt from their control points
// in the power basis and everything else is sampled.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "shapespline/directions.hpp"
#include "shapespline/error.hpp"
#include "shapespline/vec.hpp"

namespace shapespline::oracle {

/// Cubic a0 + a1 u + a2 u^2 + a3 u^3 over u in [0, 1], parameter t = h u.
class PowerCubic {
public:
    PowerCubic(const std::array<Vec3, 4>& b, double h) : h_(h) {
        a_[0] = b[0];
        a_[1] = 3.0 * (b[1] - b[0]);
        a_[2] = 3.0 * (b[2] - 2.0 * b[1] + b[0]);
        a_[3] = b[3] - 3.0 * b[2] + 3.0 * b[1] - b[0];
    }

    [[nodiscard]] Vec3 position(double u) const { return a_[0] + u * (a_[1] + u * (a_[2] + u * a_[3])); }
    [[nodiscard]] Vec3 d1(double u) const { return (a_[1] + u * (2.0 * a_[2] + 3.0 * u * a_[3])) / h_; }
    [[nodiscard]] Vec3 d2(double u) const { return (2.0 * a_[2] + 6.0 * u * a_[3]) / (h_ * h_); }
    [[nodiscard]] Vec3 d3() const { return (6.0 / (h_ * h_ * h_)) * a_[3]; }
    [[nodiscard]] Vec3 omega(double u) const { return cross(d1(u), d2(u)); }
    [[nodiscard]] double h() const noexcept { return h_; }

private:
    std::array<Vec3, 4> a_;
    double h_;
};

/// Strict sign changes of f at n uniform samples on [a, b]; samples below
/// eps_zero times the largest magnitude count as zero and are skipped.
[[nodiscard]] inline int sampled_sign_changes(const std::function<double(double)>& f, double a, double b, int n,
                                              double eps_zero = 1e-9) {
    if (n < 3 || !(a < b)) {
        throw DomainError("sign scan needs n >= 3 and a < b");
    }
    std::vector<double> vals(static_cast<std::size_t>(n));
    double scale = 0.0;
    for (int k = 0; k < n; ++k) {
        vals[static_cast<std::size_t>(k)] = f(a + (b - a) * k / (n - 1));
        scale = std::max(scale, std::abs(vals[static_cast<std::size_t>(k)]));
    }
    int changes = 0;
    int last = 0;
    for (double v : vals) {
        if (std::abs(v) <= eps_zero * scale) {
            continue;
        }
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

/// Sign changes of the planar curvature of the curve projected along w,
/// measured in an orthonormal frame of the plane w-perp.
[[nodiscard]] inline int projected_curve_inflections(const PowerCubic& c, const Vec3& w, int samples,
                                                     double eps_zero = 1e-9) {
    const Vec3 n = normalized(w);
    const Vec3 helper = std::abs(n.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(helper - dot(helper, n) * n);
    const Vec3 e2 = cross(n, e1);
    return sampled_sign_changes(
        [&](double u) {
            const Vec3 p1 = c.d1(u);
            const Vec3 p2 = c.d2(u);
            return dot(p1, e1) * dot(p2, e2) - dot(p2, e1) * dot(p1, e2);
        },
        0.0, 1.0, samples, eps_zero);
}

/// Lower bound on the spatial inflection count of a cubic: the largest
/// projected inflection count over sphere directions and witness directions
/// omega(a) x omega(b) built from sampled curvature vectors.
[[nodiscard]] inline int projected_inflection_count(const PowerCubic& c, int directions = 2048, int samples = 512,
                                                    double eps_zero = 1e-9) {
    if (directions < 16) {
        throw DomainError("at least 16 directions are required");
    }
    std::vector<Vec3> dirs;
    const std::array<double, 6> probes{0.15, 0.3, 0.45, 0.55, 0.7, 0.85};
    for (std::size_t i = 0; i < probes.size(); ++i) {
        for (std::size_t j = i + 1; j < probes.size(); ++j) {
            const Vec3 w = cross(c.omega(probes[i]), c.omega(probes[j]));
            if (norm(w) > 0.0) {
                dirs.push_back(normalized(w));
            }
        }
    }
    for (const auto& w : fibonacci_sphere(directions)) {
        dirs.push_back(w);
    }
    int best = 0;
    for (const auto& w : dirs) {
        best = std::max(best, projected_curve_inflections(c, w, samples, eps_zero));
        if (best >= 2) {
            break;
        }
    }
    return best;
}

struct FiniteDiff {
    Vec3 d1;
    Vec3 d2;
    Vec3 d3;
};

/// Central differences of orders 1-3 (second-order accurate).
[[nodiscard]] inline FiniteDiff finite_diff_derivatives(const std::function<Vec3(double)>& curve, double t, double step,
                                                        double lo = -INFINITY, double hi = INFINITY) {
    if (!(step > 0.0) || t - 2.0 * step < lo || t + 2.0 * step > hi) {
        throw DomainError("finite-difference stencil leaves the domain");
    }
    const Vec3 fm2 = curve(t - 2.0 * step);
    const Vec3 fm1 = curve(t - step);
    const Vec3 f0 = curve(t);
    const Vec3 fp1 = curve(t + step);
    const Vec3 fp2 = curve(t + 2.0 * step);
    FiniteDiff r;
    r.d1 = (fp1 - fm1) / (2.0 * step);
    r.d2 = (fp1 - 2.0 * f0 + fm1) / (step * step);
    r.d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * step * step * step);
    return r;
}

/// Positions at strictly increasing parameters.
struct SampledCurve {
    std::vector<double> ts;
    std::vector<Vec3> points;

    SampledCurve(std::vector<double> t, std::vector<Vec3> p) : ts(std::move(t)), points(std::move(p)) {
        if (ts.size() != points.size() || ts.size() < 3) {
            throw DegenerateInput("sampled curve needs at least three matching samples");
        }
        for (std::size_t i = 1; i < ts.size(); ++i) {
            if (!(ts[i] > ts[i - 1])) {
                throw DegenerateInput("sample parameters must increase");
            }
        }
    }

    [[nodiscard]] static SampledCurve from(const std::function<Vec3(double)>& f, double a, double b, int n) {
        std::vector<double> t;
        std::vector<Vec3> p;
        for (int k = 0; k < n; ++k) {
            t.push_back(a + (b - a) * k / (n - 1));
            p.push_back(f(t.back()));
        }
        return {std::move(t), std::move(p)};
    }
};

/// Discrete global convexity with respect to N: every polyline turn is
/// non-negative about N, each point sees the rest of the curve on its left
/// from the start point, and the curve stays left of the starting tangent.
[[nodiscard]] inline bool sampled_global_convexity(const SampledCurve& curve, const Vec3& N, double eps_zero = 1e-9) {
    if (curve.points.size() < 8) {
        throw DegenerateInput("sampled convexity needs at least eight samples");
    }
    if (!(norm(N) > 0.0)) {
        throw DegenerateInput("sampled convexity needs a non-zero normal");
    }
    const Vec3 n = normalized(N);
    const auto& p = curve.points;
    const std::size_t m = p.size();
    std::vector<Vec3> tangent(m);
    tangent[0] = p[1] - p[0];
    tangent[m - 1] = p[m - 1] - p[m - 2];
    for (std::size_t k = 1; k + 1 < m; ++k) {
        tangent[k] = p[k + 1] - p[k - 1];
    }
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const Vec3 a = p[k] - p[k - 1];
        const Vec3 b = p[k + 1] - p[k];
        if (dot(cross(a, b), n) < -eps_zero * norm(a) * norm(b)) {
            return false;
        }
    }
    for (std::size_t k = 1; k < m; ++k) {
        const Vec3 r = p[k] - p[0];
        if (dot(cross(r, tangent[k]), n) < -eps_zero * norm(r) * norm(tangent[k])) {
            return false;
        }
        if (dot(cross(tangent[0], r), n) < -eps_zero * norm(r) * norm(tangent[0])) {
            return false;
        }
    }
    return true;
}

/// Largest sine between g(u) and any of `refs` over n samples of [0, 1],
/// skipping vectors that vanish relative to the largest sample.
[[nodiscard]] inline double sampled_sine_sup(const std::function<Vec3(double)>& g, const std::vector<Vec3>& refs, int n,
                                             double eps_zero = 1e-9) {
    std::vector<Vec3> vs;
    double scale = 0.0;
    for (int k = 0; k < n; ++k) {
        vs.push_back(g(static_cast<double>(k) / (n - 1)));
        scale = std::max(scale, norm(vs.back()));
    }
    double sup = 0.0;
    for (const auto& v : vs) {
        const double nv = norm(v);
        if (!(nv > eps_zero * scale) || !(nv > 0.0)) {
            continue;
        }
        for (const auto& r : refs) {
            sup = std::max(sup, std::min(1.0, norm(cross(v, r)) / (nv * norm(r))));
        }
    }
    return sup;
}

} // namespace shapespline::oracle
