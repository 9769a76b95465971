#include "scissors/fock_space.hpp"

#include "scissors/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace scissors {

namespace {

void require_cutoff(int cutoff) {
    if (cutoff < 1) {
        throw ParameterError("cutoff must be >= 1, got " + std::to_string(cutoff));
    }
}

} // namespace

Eigen::Index hilbert_dimension(int cutoff) {
    require_cutoff(cutoff);
    const auto d = static_cast<Eigen::Index>(cutoff);
    return d * d * d;
}

Eigen::Index flat_index(const FockIndex& idx, int cutoff) {
    require_cutoff(cutoff);
    const auto in_range = [cutoff](int v) { return v >= 0 && v < cutoff; };
    if (!in_range(idx.n) || !in_range(idx.m) || !in_range(idx.l)) {
        throw std::out_of_range("Fock index (" + std::to_string(idx.n) + "," +
                                std::to_string(idx.m) + "," + std::to_string(idx.l) +
                                ") outside cutoff " + std::to_string(cutoff));
    }
    const auto d = static_cast<Eigen::Index>(cutoff);
    return (idx.n * d + idx.m) * d + idx.l;
}

FockIndex unflatten(Eigen::Index k, int cutoff) {
    const Eigen::Index dim = hilbert_dimension(cutoff);
    if (k < 0 || k >= dim) {
        throw std::out_of_range("flat index " + std::to_string(k) + " outside [0, " +
                                std::to_string(dim) + ")");
    }
    const auto d = static_cast<Eigen::Index>(cutoff);
    return FockIndex{static_cast<int>(k / (d * d)), static_cast<int>((k / d) % d),
                     static_cast<int>(k % d)};
}

StateVector::StateVector(int cutoff)
    : cutoff_(cutoff), amplitudes_(Eigen::VectorXcd::Zero(hilbert_dimension(cutoff))) {}

StateVector::StateVector(int cutoff, Eigen::VectorXcd amplitudes)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != hilbert_dimension(cutoff)) {
        throw DimensionMismatch("amplitude vector of length " +
                                std::to_string(amplitudes_.size()) + " does not match cutoff " +
                                std::to_string(cutoff));
    }
}

StateVector basis_state(const FockIndex& idx, int cutoff) {
    StateVector psi(cutoff);
    psi.amplitudes()(flat_index(idx, cutoff)) = 1.0;
    return psi;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.cutoff() != b.cutoff()) {
        throw DimensionMismatch("inner_product: cutoff " + std::to_string(a.cutoff()) + " vs " +
                                std::to_string(b.cutoff()));
    }
    // Eigen's dot() conjugates the first argument.
    return a.amplitudes().dot(b.amplitudes());
}

double norm(const StateVector& psi) { return psi.norm(); }

} // namespace scissors
