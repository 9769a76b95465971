#pragma once

#include "scissors/fock_space.hpp"
#include "scissors/hamiltonian.hpp"
#include "scissors/trajectory.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace scissors {

// e^{−iHt} held in diagonal form H = V diag(λ) V†; one decomposition serves every t.
class SpectralPropagator {
public:
    // Throws ParameterError if H deviates from Hermitian by more than
    // 1e-12·max(1, ‖H‖_max).
    explicit SpectralPropagator(const HamiltonianMatrix& h);

    int cutoff() const noexcept { return cutoff_; }
    // Ascending.
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    // Columns are orthonormal eigenvectors.
    const Eigen::MatrixXcd& eigenvectors() const noexcept { return eigenvectors_; }

    StateVector evolve(const StateVector& psi0, double t) const;

    // out = V · coeffs, one column per state.
    void to_fock_basis(const Eigen::MatrixXcd& coeffs, Eigen::MatrixXcd& out) const;

private:
    int cutoff_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    // Set when H is real symmetric; the basis change then runs in real arithmetic.
    Eigen::MatrixXd real_eigenvectors_;
};

struct TrajectoryOptions {
    // Keep every sampled state in Trajectory::states.
    bool record_states = false;
    // Largest Runge–Kutta step; ignored by the spectral path.
    double max_step = 1e-3;
};

SpectralPropagator make_spectral_propagator(const HamiltonianMatrix& h);

StateVector evolve_spectral(const SpectralPropagator& prop, const StateVector& psi0, double t);

// psi0 is the state at t = 0; samples at each grid time. Throws
// IntegrationError if any sampled norm drifts by more than 1e-6.
Trajectory evolve_spectral(const SpectralPropagator& prop, const StateVector& psi0,
                           std::span<const double> times, const TrajectoryOptions& options = {});

// Fixed-step RK4 on i dc/dt = H c. Same sampling and norm-drift rules as the
// spectral trajectory.
Trajectory integrate_amplitude_odes(const HamiltonianMatrix& h, const StateVector& psi0,
                                    std::span<const double> times,
                                    const TrajectoryOptions& options = {});
Trajectory integrate_amplitude_odes(const SystemParams& params, const StateVector& psi0,
                                    std::span<const double> times,
                                    const TrajectoryOptions& options = {});

// 0, step, 2·step, ... up to t_max (inclusive within rounding).
std::vector<double> uniform_time_grid(double t_max, double step);

} // namespace scissors
