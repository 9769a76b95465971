#include "scissors/truncated_model.hpp"

#include "scissors/detail/rk4.hpp"
#include "scissors/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace scissors {

QubitAmplitudes QubitAmplitudes::basis(int n, int m, int l) {
    QubitAmplitudes q;
    q(n, m, l) = 1.0;
    return q;
}

double QubitAmplitudes::norm_squared() const {
    double total = 0.0;
    for (const Complex& v : c) {
        total += std::norm(v);
    }
    return total;
}

// Restricting the full Hamiltonian to {0,1}³:
//  * Kerr terms vanish because n(n−1) = 0 for n ∈ {0,1}.
//  * ε a†b maps |0,1,l> to |1,0,l> with weight √1·√1, so row (1,0,l) picks up
//    ε·c(0,1,l) and the conjugate term gives row (0,1,l) ε*·c(1,0,l). The a†c and
//    b†c pairs follow the same pattern.
//  * α a† maps |0,m,l> to |1,m,l> with weight √1, so row (1,m,l) picks up
//    α·c(0,m,l) and row (0,m,l) picks up α*·c(1,m,l); likewise β on mode b and
//    γ on mode c. Raising a singly occupied mode leaves the subspace and is dropped.
// With drives off this is exactly i dc_001/dt = ε c_100 + ε c_010 and the other
// seven rows of the coupled undriven system.
QubitAmplitudes truncated_rhs(const QubitAmplitudes& c, double epsilon, const Drives& drives) {
    const Complex eps{epsilon, 0.0};
    QubitAmplitudes out;
    for (int x = 0; x < 2; ++x) {
        // exchange a <-> b, spectator l = x
        out(1, 0, x) += eps * c(0, 1, x);
        out(0, 1, x) += std::conj(eps) * c(1, 0, x);
        // exchange a <-> c, spectator m = x
        out(1, x, 0) += eps * c(0, x, 1);
        out(0, x, 1) += std::conj(eps) * c(1, x, 0);
        // exchange b <-> c, spectator n = x
        out(x, 1, 0) += eps * c(x, 0, 1);
        out(x, 0, 1) += std::conj(eps) * c(x, 1, 0);
    }
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            out(1, u, v) += drives.alpha * c(0, u, v);
            out(0, u, v) += std::conj(drives.alpha) * c(1, u, v);
            out(u, 1, v) += drives.beta * c(u, 0, v);
            out(u, 0, v) += std::conj(drives.beta) * c(u, 1, v);
            out(u, v, 1) += drives.gamma * c(u, v, 0);
            out(u, v, 0) += std::conj(drives.gamma) * c(u, v, 1);
        }
    }
    return out;
}

std::vector<QubitAmplitudes> integrate_truncated(const QubitAmplitudes& c0, double epsilon,
                                                 const Drives& drives,
                                                 std::span<const double> times,
                                                 double max_step) {
    if (std::abs(std::sqrt(c0.norm_squared()) - 1.0) > 1e-8) {
        throw ParameterError("initial qubit amplitudes must be normalized");
    }
    if (!(max_step > 0.0)) {
        throw ParameterError("Runge-Kutta step must be positive");
    }
    detail::require_time_grid(times);

    using Vec8 = Eigen::Matrix<Complex, 8, 1>;
    const auto to_vec = [](const QubitAmplitudes& q) {
        return Vec8(Eigen::Map<const Vec8>(q.c.data()));
    };
    const auto from_vec = [](const Vec8& v) {
        QubitAmplitudes q;
        Eigen::Map<Vec8>(q.c.data()) = v;
        return q;
    };
    const Complex minus_i{0.0, -1.0};
    const auto rhs = [&](const Vec8& y, Vec8& dydt) {
        dydt = minus_i * to_vec(truncated_rhs(from_vec(y), epsilon, drives));
    };

    Vec8 y = to_vec(c0);
    detail::Rk4Stepper<Vec8> stepper(y);
    std::vector<QubitAmplitudes> out;
    out.reserve(times.size());
    double t_now = 0.0;
    for (double t : times) {
        stepper.advance(y, t_now, t, max_step, rhs);
        t_now = t;
        detail::check_norm_drift(y.norm(), t);
        out.push_back(from_vec(y));
    }
    return out;
}

QubitAmplitudes closed_form_undriven(double epsilon, double t) {
    const Complex forward = std::polar(1.0, epsilon * t);
    const Complex backward = std::polar(1.0, -2.0 * epsilon * t);
    QubitAmplitudes q;
    q(0, 0, 1) = (2.0 * forward + backward) / 3.0;
    q(0, 1, 0) = (-forward + backward) / 3.0;
    q(1, 0, 0) = q(0, 1, 0);
    return q;
}

QubitAmplitudes w_state_wavefunction(double epsilon, double t) {
    return closed_form_undriven(epsilon, t);
}

QubitAmplitudes closed_form_driven(double epsilon, double t) {
    const double s7 = std::sqrt(7.0);
    const double s3 = std::sqrt(3.0);
    const Complex i{0.0, 1.0};
    const double x7 = s7 * epsilon * t;
    const double x3 = s3 * epsilon * t;
    const double x2 = 2.0 * epsilon * t;

    const Complex c000 = std::polar(1.0, -x2) * (s7 / 7.0 * i * std::sin(x7) + 0.5 * std::cos(x7)) +
                         0.5 * std::cos(x3);
    const Complex c001 =
        -s7 / 14.0 * (i * std::cos(x2) * std::sin(x7) + std::sin(x2) * std::sin(x7)) -
        s3 / 6.0 * i * std::sin(x3);
    const Complex c011 = c001 + s3 / 3.0 * i * std::sin(x3);
    const Complex c111 = c000 - std::cos(x3);

    QubitAmplitudes q;
    q(0, 0, 0) = c000;
    q(0, 0, 1) = q(0, 1, 0) = q(1, 0, 0) = c001;
    q(0, 1, 1) = q(1, 0, 1) = q(1, 1, 0) = c011;
    q(1, 1, 1) = c111;
    return q;
}

double w_time(int n, double epsilon) {
    if (n < 1) {
        throw ParameterError("W-time index must be >= 1, got " + std::to_string(n));
    }
    if (!(epsilon > 0.0)) {
        throw ParameterError("W-time requires epsilon > 0");
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double bracket = (n - (1.0 + sign) / 2.0) + sign / 3.0;
    return std::numbers::pi / (3.0 * epsilon) * bracket;
}

std::vector<double> scan_w_times(int count, double epsilon) {
    if (count < 0) {
        throw ParameterError("root count must be non-negative");
    }
    if (!(epsilon > 0.0)) {
        throw ParameterError("root scan requires epsilon > 0");
    }
    const auto excess = [epsilon](double t) {
        return std::norm(closed_form_undriven(epsilon, t)(0, 0, 1)) - 1.0 / 3.0;
    };
    // |c_001|² has period 2π/(3ε) with two simple crossings of 1/3 per period.
    const double seed_step = 2.0 * std::numbers::pi / (3.0 * epsilon) / 48.0;

    std::vector<double> roots;
    double lo = 0.0;
    double f_lo = excess(lo);
    while (static_cast<int>(roots.size()) < count) {
        const double hi = lo + seed_step;
        const double f_hi = excess(hi);
        if ((f_lo < 0.0) != (f_hi < 0.0)) {
            double a = lo;
            double b = hi;
            double f_a = f_lo;
            // Bisect down to adjacent doubles.
            for (;;) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) {
                    break;
                }
                const double f_mid = excess(mid);
                if ((f_mid < 0.0) == (f_a < 0.0)) {
                    a = mid;
                    f_a = f_mid;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    return roots;
}

StateVector embed(const QubitAmplitudes& q, int cutoff) {
    if (cutoff < 2) {
        throw DimensionMismatch("qubit amplitudes need cutoff >= 2, got " +
                                std::to_string(cutoff));
    }
    StateVector psi(cutoff);
    for (int n = 0; n < 2; ++n) {
        for (int m = 0; m < 2; ++m) {
            for (int l = 0; l < 2; ++l) {
                psi[{n, m, l}] = q(n, m, l);
            }
        }
    }
    return psi;
}

QubitAmplitudes restrict_to_qubits(const StateVector& psi) {
    if (psi.cutoff() < 2) {
        throw DimensionMismatch("state with cutoff < 2 has no qubit subspace");
    }
    QubitAmplitudes q;
    for (int n = 0; n < 2; ++n) {
        for (int m = 0; m < 2; ++m) {
            for (int l = 0; l < 2; ++l) {
                q(n, m, l) = psi[{n, m, l}];
            }
        }
    }
    return q;
}

double max_amplitude_deviation(const QubitAmplitudes& a, const QubitAmplitudes& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.c.size(); ++k) {
        worst = std::max(worst, std::abs(a.c[k] - b.c[k]));
    }
    return worst;
}

} // namespace scissors
