#pragma once

#include <cmath>
#include <string>

#include "shapespline/error.hpp"

namespace shapespline {

/// Thresholds shared by every criterion.
///
/// eps_zero is relative: a scalar built from vectors a, b, ... counts as zero
/// when its magnitude is at most eps_zero times the product of their norms.
struct Tolerances {
    double eps0{0.05};          // collinearity sine bound
    double eps1{0.05};          // coplanarity sine bound
    double eps_zero{1e-9};
    double eta_fraction{1.0};   // fraction of each adjacent segment used as the window around a vertex

    void validate() const {
        auto in_unit = [](double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; };
        if (!in_unit(eps0)) {
            throw DomainError("eps0 must lie in (0, 1]");
        }
        if (!in_unit(eps1)) {
            throw DomainError("eps1 must lie in (0, 1]");
        }
        if (!std::isfinite(eps_zero) || eps_zero < 0.0 || eps_zero >= 1.0) {
            throw DomainError("eps_zero must lie in [0, 1)");
        }
        if (!in_unit(eta_fraction)) {
            throw DomainError("eta_fraction must lie in (0, 1]");
        }
    }
};

/// True when |value| <= eps * scale.
[[nodiscard]] inline bool near_zero(double value, double scale, double eps) {
    return std::abs(value) <= eps * scale;
}

} // namespace shapespline
