#pragma once

#include "scissors/fock_space.hpp"

#include <array>
#include <span>
#include <vector>

namespace scissors {

// The eight amplitudes c_nml with n, m, l ∈ {0, 1}, binary order:
// index = 4n + 2m + l, so c_000 first and c_111 last. This matches the
// flat Fock index at cutoff 2.
struct QubitAmplitudes {
    std::array<Complex, 8> c{};

    static constexpr std::size_t index(int n, int m, int l) noexcept {
        return static_cast<std::size_t>(4 * n + 2 * m + l);
    }
    static QubitAmplitudes basis(int n, int m, int l);

    Complex& operator()(int n, int m, int l) { return c[index(n, m, l)]; }
    Complex operator()(int n, int m, int l) const { return c[index(n, m, l)]; }

    double norm_squared() const;
};

// Constant drive amplitudes on modes a, b, c.
struct Drives {
    Complex alpha{};
    Complex beta{};
    Complex gamma{};

    static Drives none() { return {}; }
    static Drives uniform(Complex amplitude) { return {amplitude, amplitude, amplitude}; }
};

// i·dc/dt for the truncated model, i.e. H_qubit · c.
QubitAmplitudes truncated_rhs(const QubitAmplitudes& c, double epsilon, const Drives& drives);

// RK4 solution of the truncated model sampled on `times` (c0 taken at t = 0).
// Throws IntegrationError on norm drift above 1e-6.
std::vector<QubitAmplitudes> integrate_truncated(const QubitAmplitudes& c0, double epsilon,
                                                 const Drives& drives,
                                                 std::span<const double> times,
                                                 double max_step = 1e-3);

// Undriven solution from |001>.
QubitAmplitudes closed_form_undriven(double epsilon, double t);

// Same amplitudes packaged as the W-generating wave function.
QubitAmplitudes w_state_wavefunction(double epsilon, double t);

// Solution from |000> with α = β = γ = ε real.
QubitAmplitudes closed_form_driven(double epsilon, double t);

// n-th time (n >= 1) at which the undriven single-photon amplitudes all have
// modulus 1/√3: t_n = (π/3ε)[(n − (1+(−1)ⁿ)/2) + (−1)ⁿ/3].
double w_time(int n, double epsilon);

// The first `count` roots of |c_001(t)|² − 1/3 of the undriven closed form,
// found by grid seeding and bisection to 1e-12. Independent cross-check of w_time.
std::vector<double> scan_w_times(int count, double epsilon);

// Place the qubit amplitudes into a Fock state with the given cutoff (>= 2).
StateVector embed(const QubitAmplitudes& q, int cutoff);
// Read back the {0,1}³ components of a Fock state.
QubitAmplitudes restrict_to_qubits(const StateVector& psi);

// max_k |a_k − b_k| over the eight amplitudes.
double max_amplitude_deviation(const QubitAmplitudes& a, const QubitAmplitudes& b);

} // namespace scissors
