#pragma once

#include "scissors/fock_space.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <numbers>

namespace scissors {

// Physical constants of the three-mode Kerr coupler in ħ = 1 units.
// Defaults are the undriven W-generation setup: χ = 30, ε = π/30, d = 8.
struct SystemParams {
    double chi_a = 30.0;
    double chi_b = 30.0;
    double chi_c = 30.0;
    // Single coupling shared by the ab, ac and bc pairs.
    Complex epsilon{std::numbers::pi / 30.0, 0.0};
    // Constant classical drive amplitudes on modes a, b, c.
    Complex alpha{};
    Complex beta{};
    Complex gamma{};
    int cutoff = kDefaultCutoff;

    bool driven() const noexcept {
        return alpha != Complex{} || beta != Complex{} || gamma != Complex{};
    }

    // Throws ParameterError when cutoff < 2.
    void validate() const;

    static SystemParams undriven_default() { return {}; }
    // α = β = γ = ε, the setup with a closed-form qubit solution.
    static SystemParams driven_default() {
        SystemParams p;
        p.alpha = p.beta = p.gamma = p.epsilon;
        return p;
    }
};

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

// Operator on the d³-dimensional truncated Fock space.
class HamiltonianMatrix {
public:
    HamiltonianMatrix(int cutoff, SparseMatrix matrix);

    int cutoff() const noexcept { return cutoff_; }
    Eigen::Index dimension() const noexcept { return matrix_.rows(); }
    const SparseMatrix& matrix() const noexcept { return matrix_; }

    Complex element(const FockIndex& row, const FockIndex& col) const;
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }
    // max_ij |H_ij|
    double max_abs() const;

private:
    int cutoff_;
    SparseMatrix matrix_;
};

// Kerr self-interaction (χ/2)n(n−1) per mode, exchange ε a†b + ε* a b† for each
// mode pair, plus optional drive α a† + α* a (and β, γ). Raising past d−1 is dropped.
HamiltonianMatrix build_hamiltonian(const SystemParams& params);

StateVector apply_hamiltonian(const HamiltonianMatrix& h, const StateVector& psi);

// diag(n + m + l)
HamiltonianMatrix total_photon_number_matrix(int cutoff);

// max_ij |H_ij − conj(H_ji)|
double hermiticity_defect(const HamiltonianMatrix& h);

// ‖AB − BA‖_max
double commutator_max_abs(const HamiltonianMatrix& a, const HamiltonianMatrix& b);

} // namespace scissors
