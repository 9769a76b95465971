#pragma once

#include "scissors/errors.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

namespace scissors::detail {

// Classical fixed-step 4th-order Runge–Kutta for dy/dt = f(y) with an
// autonomous right-hand side. Vec is any Eigen vector type; scratch buffers
// live in the stepper so stepping does not allocate.
template <class Vec>
class Rk4Stepper {
public:
    explicit Rk4Stepper(const Vec& shape)
        : k1_(shape), k2_(shape), k3_(shape), k4_(shape), probe_(shape) {}

    // rhs(const Vec& y, Vec& dydt)
    template <class Rhs>
    void step(Vec& y, double h, Rhs&& rhs) {
        rhs(y, k1_);
        probe_ = y + (0.5 * h) * k1_;
        rhs(probe_, k2_);
        probe_ = y + (0.5 * h) * k2_;
        rhs(probe_, k3_);
        probe_ = y + h * k3_;
        rhs(probe_, k4_);
        y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    }

    // Advance from t_from to t_to in equal substeps no longer than max_step.
    template <class Rhs>
    void advance(Vec& y, double t_from, double t_to, double max_step, Rhs&& rhs) {
        const double span_t = t_to - t_from;
        if (span_t <= 0.0) {
            return;
        }
        const auto substeps = static_cast<long>(std::ceil(span_t / max_step - 1e-9));
        const double h = span_t / static_cast<double>(std::max(1L, substeps));
        for (long s = 0; s < std::max(1L, substeps); ++s) {
            step(y, h, rhs);
        }
    }

private:
    Vec k1_, k2_, k3_, k4_, probe_;
};

inline constexpr double kNormDriftLimit = 1e-6;

inline void check_norm_drift(double norm, double t) {
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormDriftLimit) {
        throw IntegrationError("norm drifted to " + std::to_string(norm) + " at t = " +
                               std::to_string(t) + "; reduce the step size");
    }
}

// Sample grids must start at t >= 0 and increase strictly.
inline void require_time_grid(std::span<const double> times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || times[k] < 0.0 || (k > 0 && times[k] <= times[k - 1])) {
            throw ParameterError("time grid must be finite, non-negative and strictly increasing");
        }
    }
}

} // namespace scissors::detail
