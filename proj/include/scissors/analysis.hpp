#pragma once

#include "scissors/fock_space.hpp"
#include "scissors/trajectory.hpp"

#include <array>
#include <span>
#include <vector>

namespace scissors {

// A three-qubit reference state living on the {0,1}³ subspace.
struct TargetState {
    enum class Kind { W, GHZ };

    Kind kind;
    // Binary order, 000 first.
    std::array<Complex, 8> amplitudes;

    // (|001> + |010> + |100>)/√3
    static TargetState w();
    // (|000> + |111>)/√2
    static TargetState ghz();
};

std::vector<double> probabilities(const StateVector& psi, std::span<const FockIndex> indices);

// Population on basis states with any mode occupation >= 2.
double leakage(const StateVector& psi);

// |<target|psi>|²
double fidelity(const StateVector& psi, const TargetState& target);

// W fidelity maximised over independent phase rotations of the three modes.
// Aligning the phases of the single-photon amplitudes gives
// (|c_001| + |c_010| + |c_100|)² / 3 in closed form.
double w_fidelity_phase_optimal(const StateVector& psi);

Observables observe(const StateVector& psi);

// max_k |obs_a(t_k) − obs_b(t_k)|; throws DimensionMismatch if the grids differ.
double trajectory_max_deviation(const Trajectory& a, const Trajectory& b, Observable observable);

// Largest deviation over all eight qubit-subspace probabilities.
double trajectory_max_probability_deviation(const Trajectory& a, const Trajectory& b);

// max_k ‖psi_a(t_k) − psi_b(t_k)‖; both trajectories must carry full states.
double trajectory_max_state_deviation(const Trajectory& a, const Trajectory& b);

} // namespace scissors
