#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "shapespline/vec.hpp"

namespace shapespline {

/// Deterministic, roughly uniform directions on the unit sphere, followed by
/// the six signed coordinate axes.
[[nodiscard]] inline std::vector<Vec3> fibonacci_sphere(int count) {
    std::vector<Vec3> out;
    if (count < 0) {
        count = 0;
    }
    out.reserve(static_cast<std::size_t>(count) + 6);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 e;
        (axis == 0 ? e.x : axis == 1 ? e.y : e.z) = 1.0;
        out.push_back(e);
        out.push_back(-e);
    }
    return out;
}

/// Small deterministic tilts of a unit direction, used to step off exact
/// witness directions where sign tests would see zeros.
[[nodiscard]] inline std::vector<Vec3> perturbations(const Vec3& w, double amount) {
    Vec3 a = std::abs(w.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(w, a));
    const Vec3 e2 = cross(w, e1);
    return {normalized(w + amount * e1), normalized(w - amount * e1), normalized(w + amount * e2),
            normalized(w - amount * e2)};
}

} // namespace shapespline
