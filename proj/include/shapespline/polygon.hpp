#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "shapespline/directions.hpp"
#include "shapespline/error.hpp"
#include "shapespline/tolerance.hpp"
#include "shapespline/vec.hpp"

namespace shapespline {

/// Strict sign changes, skipping entries with |v| <= zero_threshold.
[[nodiscard]] inline int sign_changes(std::span<const double> seq, double zero_threshold = 0.0) {
    int changes = 0;
    int last = 0;
    for (double v : seq) {
        if (std::abs(v) <= zero_threshold) {
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

/// Planar polygonal arc P0 P1 ... Pn.
class PolyArc2 {
public:
    explicit PolyArc2(std::vector<Vec2> points) : points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!is_finite(points_[i])) {
                throw DegenerateInput("arc point has a non-finite component");
            }
            if (i > 0 && points_[i] == points_[i - 1]) {
                throw DegenerateInput("arc has coincident consecutive points");
            }
        }
    }

    [[nodiscard]] const std::vector<Vec2>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

    /// Turn values V_i = (P_i - P_{i-1}) x (P_{i+1} - P_i), i = 1..n-1.
    [[nodiscard]] std::vector<double> turns() const {
        std::vector<double> v;
        for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
            v.push_back(cross(points_[i] - points_[i - 1], points_[i + 1] - points_[i]));
        }
        return v;
    }

private:
    std::vector<Vec2> points_;
};

/// An arc is regular when its edge directions fit in a closed half-plane and
/// no vertex turns through exactly pi.
[[nodiscard]] inline bool is_regular_arc(const PolyArc2& arc, double eps_zero = 1e-9) {
    const auto& p = arc.points();
    if (p.size() < 2) {
        return true;
    }
    std::vector<double> angles;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Vec2 e = p[i] - p[i - 1];
        angles.push_back(std::atan2(e.y, e.x));
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const Vec2 a = p[i] - p[i - 1];
        const Vec2 b = p[i + 1] - p[i];
        if (near_zero(cross(a, b), norm(a) * norm(b), eps_zero) && dot(a, b) < 0.0) {
            return false;
        }
    }
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) {
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    }
    return max_gap >= std::numbers::pi - eps_zero;
}

/// i(Gamma): strict sign changes of the turn values.
[[nodiscard]] inline int planar_inflection_count(const PolyArc2& arc, double eps_zero = 1e-9) {
    const auto& p = arc.points();
    std::vector<double> v;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const Vec2 a = p[i] - p[i - 1];
        const Vec2 b = p[i + 1] - p[i];
        const double c = cross(a, b);
        v.push_back(near_zero(c, norm(a) * norm(b), eps_zero) ? 0.0 : c);
    }
    return sign_changes(v);
}

enum class ShapeFlag : std::uint8_t {
    Convex = 1U << 0U,
    Inflection = 1U << 1U,
    Collinear = 1U << 2U,
    Torsion = 1U << 3U,
    Coplanar = 1U << 4U,
};

class ShapeFlags {
public:
    constexpr ShapeFlags() = default;

    constexpr void set(ShapeFlag f) { bits_ |= static_cast<std::uint8_t>(f); }
    [[nodiscard]] constexpr bool has(ShapeFlag f) const { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::uint8_t bits() const { return bits_; }
    friend constexpr bool operator==(ShapeFlags, ShapeFlags) = default;

    /// Lower-case names of the set flags in a fixed order.
    [[nodiscard]] std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (has(ShapeFlag::Convex)) out.emplace_back("convex");
        if (has(ShapeFlag::Inflection)) out.emplace_back("inflection");
        if (has(ShapeFlag::Collinear)) out.emplace_back("collinear");
        if (has(ShapeFlag::Torsion)) out.emplace_back("torsion");
        if (has(ShapeFlag::Coplanar)) out.emplace_back("coplanar");
        return out;
    }

private:
    std::uint8_t bits_{0};
};

/// Data points x_0..x_n with chords L_k = x_k - x_{k-1} (k = 1..n), binormals
/// N_v = L_v x L_{v+1} at interior vertices (v = 1..n-1) and discrete torsions
/// D_k = [L_{k-1} L_k L_{k+1}] (k = 2..n-1). All indices are 1-based as written.
class DataPolygon {
public:
    explicit DataPolygon(std::vector<Vec3> points, double eps_zero = 1e-9) : points_(std::move(points)) {
        if (points_.size() < 2) {
            throw DegenerateInput("at least two data points are required");
        }
        for (const auto& p : points_) {
            require_finite(p, "data point");
        }
        Vec3 lo = points_.front();
        Vec3 hi = points_.front();
        for (const auto& p : points_) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
        diagonal_ = norm(hi - lo);
        chords_ = compute_chords(points_);
        for (std::size_t k = 0; k < chords_.size(); ++k) {
            if (!(norm(chords_[k]) > eps_zero * diagonal_) || !(norm(chords_[k]) > 0.0)) {
                throw DegenerateInput("data points " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                      " coincide");
            }
        }
        binormals_ = compute_binormals(chords_);
        torsions_ = compute_torsions(chords_);
    }

    [[nodiscard]] static std::vector<Vec3> compute_chords(const std::vector<Vec3>& pts) {
        std::vector<Vec3> out;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            out.push_back(pts[i] - pts[i - 1]);
        }
        return out;
    }
    [[nodiscard]] static std::vector<Vec3> compute_binormals(const std::vector<Vec3>& chords) {
        std::vector<Vec3> out;
        for (std::size_t i = 1; i < chords.size(); ++i) {
            out.push_back(cross(chords[i - 1], chords[i]));
        }
        return out;
    }
    [[nodiscard]] static std::vector<double> compute_torsions(const std::vector<Vec3>& chords) {
        std::vector<double> out;
        for (std::size_t i = 1; i + 1 < chords.size(); ++i) {
            out.push_back(triple(chords[i - 1], chords[i], chords[i + 1]));
        }
        return out;
    }

    /// Number of chords n.
    [[nodiscard]] int segments() const noexcept { return static_cast<int>(chords_.size()); }
    [[nodiscard]] const std::vector<Vec3>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<Vec3>& chords() const noexcept { return chords_; }
    [[nodiscard]] const std::vector<Vec3>& binormals() const noexcept { return binormals_; }
    [[nodiscard]] const std::vector<double>& torsions() const noexcept { return torsions_; }
    [[nodiscard]] double bbox_diagonal() const noexcept { return diagonal_; }

    [[nodiscard]] const Vec3& point(int i) const {
        check(i, 0, segments(), "point");
        return points_[static_cast<std::size_t>(i)];
    }
    [[nodiscard]] const Vec3& chord(int k) const {
        check(k, 1, segments(), "chord");
        return chords_[static_cast<std::size_t>(k - 1)];
    }
    [[nodiscard]] const Vec3& binormal(int v) const {
        check(v, 1, segments() - 1, "binormal");
        return binormals_[static_cast<std::size_t>(v - 1)];
    }
    [[nodiscard]] double torsion(int k) const {
        check(k, 2, segments() - 1, "torsion");
        return torsions_[static_cast<std::size_t>(k - 2)];
    }

    [[nodiscard]] bool has_binormal(int v) const noexcept { return v >= 1 && v <= segments() - 1; }
    [[nodiscard]] bool has_torsion(int k) const noexcept { return k >= 2 && k <= segments() - 1; }

    /// True when the chords meeting at v are (anti)parallel within eps_zero.
    [[nodiscard]] bool binormal_degenerate(int v, double eps_zero) const {
        return near_zero(norm(binormal(v)), norm(chord(v)) * norm(chord(v + 1)), eps_zero);
    }

private:
    static void check(int i, int lo, int hi, const char* what) {
        if (i < lo || i > hi) {
            throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
    }

    std::vector<Vec3> points_;
    std::vector<Vec3> chords_;
    std::vector<Vec3> binormals_;
    std::vector<double> torsions_;
    double diagonal_{0.0};
};

/// Flags that hold at interior vertex v: Collinear when L_v, L_{v+1} are
/// parallel and co-directed.
[[nodiscard]] inline ShapeFlags classify_vertex(const DataPolygon& poly, int v, double eps_zero = 1e-9) {
    if (!poly.has_binormal(v)) {
        throw IndexOutOfRange("vertex " + std::to_string(v) + " is not interior");
    }
    ShapeFlags f;
    if (poly.binormal_degenerate(v, eps_zero) && dot(poly.chord(v), poly.chord(v + 1)) > 0.0) {
        f.set(ShapeFlag::Collinear);
    }
    return f;
}

/// Data conditions for segment k (from x_{k-1} to x_k), defined for
/// 2 <= k <= n-1 where N_{k-1}, N_k and D_k all exist.
[[nodiscard]] inline ShapeFlags classify_segment(const DataPolygon& poly, int k, double eps_zero = 1e-9) {
    if (k < 1 || k > poly.segments()) {
        throw IndexOutOfRange("segment " + std::to_string(k) + " out of range");
    }
    ShapeFlags f;
    if (!poly.has_binormal(k - 1) || !poly.has_binormal(k)) {
        return f;
    }
    const bool degenerate = poly.binormal_degenerate(k - 1, eps_zero) || poly.binormal_degenerate(k, eps_zero);
    const Vec3& np = poly.binormal(k - 1);
    const Vec3& nc = poly.binormal(k);
    if (!degenerate) {
        const double d = dot(np, nc);
        const double ref = norm(np) * norm(nc);
        if (d > eps_zero * ref) {
            f.set(ShapeFlag::Convex);
        } else if (d < -eps_zero * ref) {
            f.set(ShapeFlag::Inflection);
        }
    }
    const double ref = norm(poly.chord(k - 1)) * norm(poly.chord(k)) * norm(poly.chord(k + 1));
    if (near_zero(poly.torsion(k), ref, eps_zero)) {
        if (!degenerate) {
            f.set(ShapeFlag::Coplanar);
        }
    } else {
        f.set(ShapeFlag::Torsion);
    }
    return f;
}

/// Lower bound on I(Gamma) = sup_w S(w.V_1, ..., w.V_{n-1}) with V_v the
/// spatial turn vectors, searched over `directions` sphere samples plus
/// witness directions built from pairs of turn vectors.
[[nodiscard]] inline int spatial_arc_inflection_count(const DataPolygon& poly, int directions = 2048,
                                                      double eps_zero = 1e-9) {
    const auto& turns = poly.binormals();
    if (turns.size() < 2) {
        return 0;
    }
    std::vector<Vec3> dirs = fibonacci_sphere(directions);
    std::vector<Vec3> unit;
    for (const auto& v : turns) {
        if (norm(v) > 0.0) {
            unit.push_back(normalized(v));
            dirs.push_back(unit.back());
            dirs.push_back(-unit.back());
        }
    }
    const std::size_t reach = unit.size() <= 64 ? unit.size() : 2;
    for (std::size_t i = 0; i < unit.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.size() && j <= i + reach; ++j) {
            const Vec3 w = cross(unit[i], unit[j]);
            if (norm(w) > 1e-12) {
                const Vec3 wn = normalized(w);
                for (const auto& p : perturbations(wn, 1e-3)) {
                    dirs.push_back(p);
                    dirs.push_back(-p);
                }
            }
            const Vec3 mid = unit[i] - unit[j];
            if (norm(mid) > 1e-12) {
                dirs.push_back(normalized(mid));
            }
        }
    }
    int best = 0;
    std::vector<double> vals(turns.size());
    for (const auto& w : dirs) {
        for (std::size_t i = 0; i < turns.size(); ++i) {
            const double d = dot(w, turns[i]);
            vals[i] = near_zero(d, norm(turns[i]), eps_zero) ? 0.0 : d;
        }
        best = std::max(best, sign_changes(vals));
    }
    return best;
}

} // namespace shapespline
