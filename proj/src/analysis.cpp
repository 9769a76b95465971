#include "scissors/analysis.hpp"

#include "scissors/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scissors {

namespace {

constexpr FockIndex qubit_index(std::size_t bits) {
    return FockIndex{static_cast<int>((bits >> 2) & 1U), static_cast<int>((bits >> 1) & 1U),
                     static_cast<int>(bits & 1U)};
}

void require_same_grid(const Trajectory& a, const Trajectory& b) {
    if (a.times.size() != b.times.size()) {
        throw DimensionMismatch("trajectory grids differ in length: " +
                                std::to_string(a.times.size()) + " vs " +
                                std::to_string(b.times.size()));
    }
    for (std::size_t k = 0; k < a.times.size(); ++k) {
        const double scale = std::max(1.0, std::abs(a.times[k]));
        if (std::abs(a.times[k] - b.times[k]) > 1e-12 * scale) {
            throw DimensionMismatch("trajectory grids differ at sample " + std::to_string(k));
        }
    }
}

} // namespace

TargetState TargetState::w() {
    const double a = 1.0 / std::sqrt(3.0);
    return {Kind::W, {0.0, a, a, 0.0, a, 0.0, 0.0, 0.0}};
}

TargetState TargetState::ghz() {
    const double a = 1.0 / std::sqrt(2.0);
    return {Kind::GHZ, {a, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, a}};
}

std::vector<double> probabilities(const StateVector& psi, std::span<const FockIndex> indices) {
    std::vector<double> out;
    out.reserve(indices.size());
    for (const FockIndex& idx : indices) {
        out.push_back(std::norm(psi[idx]));
    }
    return out;
}

double leakage(const StateVector& psi) {
    const auto& amps = psi.amplitudes();
    double total = 0.0;
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
        if (!unflatten(k, psi.cutoff()).in_qubit_subspace()) {
            total += std::norm(amps(k));
        }
    }
    return total;
}

double fidelity(const StateVector& psi, const TargetState& target) {
    if (psi.cutoff() < 2) {
        throw DimensionMismatch("fidelity: state with cutoff " + std::to_string(psi.cutoff()) +
                                " cannot hold a three-qubit target");
    }
    Complex overlap{};
    for (std::size_t bits = 0; bits < target.amplitudes.size(); ++bits) {
        overlap += std::conj(target.amplitudes[bits]) * psi[qubit_index(bits)];
    }
    return std::norm(overlap);
}

double w_fidelity_phase_optimal(const StateVector& psi) {
    const double sum =
        std::abs(psi[{0, 0, 1}]) + std::abs(psi[{0, 1, 0}]) + std::abs(psi[{1, 0, 0}]);
    return sum * sum / 3.0;
}

Observables observe(const StateVector& psi) {
    Observables rec;
    for (std::size_t bits = 0; bits < rec.qubit_probabilities.size(); ++bits) {
        rec.qubit_probabilities[bits] = std::norm(psi[qubit_index(bits)]);
    }
    rec.leakage = leakage(psi);
    rec.w_fidelity_phase_optimal = w_fidelity_phase_optimal(psi);
    rec.norm = psi.norm();
    return rec;
}

double trajectory_max_deviation(const Trajectory& a, const Trajectory& b, Observable observable) {
    require_same_grid(a, b);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        worst = std::max(worst, std::abs(observable_value(a.records[k], observable) -
                                         observable_value(b.records[k], observable)));
    }
    return worst;
}

double trajectory_max_probability_deviation(const Trajectory& a, const Trajectory& b) {
    double worst = 0.0;
    for (Observable obs : kAllObservables) {
        if (obs == Observable::Leakage) {
            break;
        }
        worst = std::max(worst, trajectory_max_deviation(a, b, obs));
    }
    return worst;
}

double trajectory_max_state_deviation(const Trajectory& a, const Trajectory& b) {
    require_same_grid(a, b);
    if (a.states.size() != a.times.size() || b.states.size() != b.times.size()) {
        throw std::invalid_argument("trajectory_max_state_deviation needs full state storage");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        if (a.states[k].cutoff() != b.states[k].cutoff()) {
            throw DimensionMismatch("trajectory states have different cutoffs");
        }
        worst = std::max(worst, (a.states[k].amplitudes() - b.states[k].amplitudes()).norm());
    }
    return worst;
}

} // namespace scissors
