#include "scissors/propagator.hpp"

#include "scissors/analysis.hpp"
#include "scissors/detail/rk4.hpp"
#include "scissors/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scissors {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kInitialNormTolerance = 1e-8;

void require_normalized(const StateVector& psi0) {
    if (std::abs(psi0.norm() - 1.0) > kInitialNormTolerance) {
        throw ParameterError("initial state must be normalized, norm = " +
                             std::to_string(psi0.norm()));
    }
}

void require_same_cutoff(int expected, const StateVector& psi, const char* where) {
    if (psi.cutoff() != expected) {
        throw DimensionMismatch(std::string(where) + ": state cutoff " +
                                std::to_string(psi.cutoff()) + " vs operator cutoff " +
                                std::to_string(expected));
    }
}

void record(Trajectory& traj, double t, const StateVector& psi, bool keep_state) {
    traj.times.push_back(t);
    traj.records.push_back(observe(psi));
    if (keep_state) {
        traj.states.push_back(psi);
    }
    detail::check_norm_drift(traj.records.back().norm, t);
}

} // namespace

SpectralPropagator::SpectralPropagator(const HamiltonianMatrix& h) : cutoff_(h.cutoff()) {
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance * std::max(1.0, h.max_abs())) {
        throw ParameterError("Hamiltonian is not Hermitian: max |H - H^dagger| = " +
                             std::to_string(defect));
    }
    const Eigen::MatrixXcd dense = h.dense();
    if (dense.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense.real());
        if (solver.info() != Eigen::Success) {
            throw IntegrationError("Hermitian eigendecomposition did not converge");
        }
        eigenvalues_ = solver.eigenvalues();
        real_eigenvectors_ = solver.eigenvectors();
        eigenvectors_ = real_eigenvectors_.cast<Complex>();
        return;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw IntegrationError("Hermitian eigendecomposition did not converge");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

void SpectralPropagator::to_fock_basis(const Eigen::MatrixXcd& coeffs, Eigen::MatrixXcd& out) const {
    if (real_eigenvectors_.size() == 0) {
        out.noalias() = eigenvectors_ * coeffs;
        return;
    }
    const Eigen::MatrixXd re = real_eigenvectors_ * coeffs.real();
    const Eigen::MatrixXd im = real_eigenvectors_ * coeffs.imag();
    out.resize(re.rows(), re.cols());
    out.real() = re;
    out.imag() = im;
}

StateVector SpectralPropagator::evolve(const StateVector& psi0, double t) const {
    require_same_cutoff(cutoff_, psi0, "evolve_spectral");
    Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi0.amplitudes();
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * t);
    }
    Eigen::MatrixXcd out;
    to_fock_basis(coeffs, out);
    return StateVector(cutoff_, out.col(0));
}

SpectralPropagator make_spectral_propagator(const HamiltonianMatrix& h) {
    return SpectralPropagator(h);
}

StateVector evolve_spectral(const SpectralPropagator& prop, const StateVector& psi0, double t) {
    return prop.evolve(psi0, t);
}

Trajectory evolve_spectral(const SpectralPropagator& prop, const StateVector& psi0,
                           std::span<const double> times, const TrajectoryOptions& options) {
    require_same_cutoff(prop.cutoff(), psi0, "evolve_spectral");
    require_normalized(psi0);
    detail::require_time_grid(times);

    const Eigen::VectorXd& lambda = prop.eigenvalues();
    const Eigen::VectorXcd overlaps = prop.eigenvectors().adjoint() * psi0.amplitudes();

    // Samples are processed in blocks so the basis change is one matrix product per block.
    constexpr std::size_t kBlock = 128;
    const Eigen::Index dim = overlaps.size();
    Trajectory traj;
    traj.times.reserve(times.size());
    traj.records.reserve(times.size());
    Eigen::MatrixXcd phased;
    Eigen::MatrixXcd states;
    StateVector psi(prop.cutoff());
    for (std::size_t first = 0; first < times.size(); first += kBlock) {
        const auto width = static_cast<Eigen::Index>(std::min(kBlock, times.size() - first));
        phased.resize(dim, width);
        for (Eigen::Index j = 0; j < width; ++j) {
            const double t = times[first + static_cast<std::size_t>(j)];
            for (Eigen::Index k = 0; k < dim; ++k) {
                phased(k, j) = overlaps(k) * std::polar(1.0, -lambda(k) * t);
            }
        }
        prop.to_fock_basis(phased, states);
        for (Eigen::Index j = 0; j < width; ++j) {
            psi.amplitudes() = states.col(j);
            record(traj, times[first + static_cast<std::size_t>(j)], psi, options.record_states);
        }
    }
    return traj;
}

Trajectory integrate_amplitude_odes(const HamiltonianMatrix& h, const StateVector& psi0,
                                    std::span<const double> times,
                                    const TrajectoryOptions& options) {
    require_same_cutoff(h.cutoff(), psi0, "integrate_amplitude_odes");
    require_normalized(psi0);
    detail::require_time_grid(times);
    if (!(options.max_step > 0.0)) {
        throw ParameterError("Runge-Kutta step must be positive");
    }

    const SparseMatrix& hm = h.matrix();
    const Complex minus_i{0.0, -1.0};
    // dc/dt = −i H c
    const auto rhs = [&hm, minus_i](const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt) {
        dydt.noalias() = hm * y;
        dydt *= minus_i;
    };

    Eigen::VectorXcd y = psi0.amplitudes();
    detail::Rk4Stepper<Eigen::VectorXcd> stepper(y);
    Trajectory traj;
    traj.times.reserve(times.size());
    traj.records.reserve(times.size());
    double t_now = 0.0;
    for (double t : times) {
        stepper.advance(y, t_now, t, options.max_step, rhs);
        t_now = t;
        record(traj, t, StateVector(h.cutoff(), y), options.record_states);
    }
    return traj;
}

Trajectory integrate_amplitude_odes(const SystemParams& params, const StateVector& psi0,
                                    std::span<const double> times,
                                    const TrajectoryOptions& options) {
    return integrate_amplitude_odes(build_hamiltonian(params), psi0, times, options);
}

std::vector<double> uniform_time_grid(double t_max, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ParameterError("time step must be positive");
    }
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw ParameterError("t_max must be non-negative");
    }
    const auto count = static_cast<std::size_t>(std::floor(t_max / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k) {
        grid[k] = static_cast<double>(k) * step;
    }
    return grid;
}

} // namespace scissors
