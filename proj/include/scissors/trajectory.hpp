#pragma once

#include "scissors/fock_space.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace scissors {

// Reduced observables recorded at one sample time.
struct Observables {
    // |c_nml|² for the eight {0,1}³ states in binary order (000 first, 111 last).
    std::array<double, 8> qubit_probabilities{};
    double leakage = 0.0;
    double w_fidelity_phase_optimal = 0.0;
    double norm = 0.0;
};

enum class Observable {
    P000, P001, P010, P011, P100, P101, P110, P111,
    Leakage,
    WFidelityPhaseOptimal,
    Norm,
};

inline constexpr std::array<Observable, 11> kAllObservables = {
    Observable::P000, Observable::P001, Observable::P010, Observable::P011,
    Observable::P100, Observable::P101, Observable::P110, Observable::P111,
    Observable::Leakage, Observable::WFidelityPhaseOptimal, Observable::Norm,
};

// Column name used in CSV output, e.g. "P_001", "leakage", "w_fid_phase_opt".
std::string_view observable_name(Observable obs);
std::optional<Observable> parse_observable(std::string_view name);
double observable_value(const Observables& record, Observable obs);

// Time series sampled on a strictly increasing grid.
struct Trajectory {
    std::vector<double> times;
    std::vector<Observables> records;
    // Filled only when full state storage was requested.
    std::vector<StateVector> states;

    std::size_t size() const noexcept { return times.size(); }
};

} // namespace scissors
