#include "scissors/trajectory.hpp"

#include <stdexcept>

namespace scissors {

std::string_view observable_name(Observable obs) {
    switch (obs) {
    case Observable::P000: return "P_000";
    case Observable::P001: return "P_001";
    case Observable::P010: return "P_010";
    case Observable::P011: return "P_011";
    case Observable::P100: return "P_100";
    case Observable::P101: return "P_101";
    case Observable::P110: return "P_110";
    case Observable::P111: return "P_111";
    case Observable::Leakage: return "leakage";
    case Observable::WFidelityPhaseOptimal: return "w_fid_phase_opt";
    case Observable::Norm: return "norm";
    }
    throw std::logic_error("unhandled observable");
}

std::optional<Observable> parse_observable(std::string_view name) {
    for (Observable obs : kAllObservables) {
        if (observable_name(obs) == name) {
            return obs;
        }
    }
    return std::nullopt;
}

double observable_value(const Observables& record, Observable obs) {
    switch (obs) {
    case Observable::Leakage: return record.leakage;
    case Observable::WFidelityPhaseOptimal: return record.w_fidelity_phase_optimal;
    case Observable::Norm: return record.norm;
    default: return record.qubit_probabilities[static_cast<std::size_t>(obs)];
    }
}

} // namespace scissors
