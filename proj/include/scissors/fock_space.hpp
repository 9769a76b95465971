#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>

namespace scissors {

using Complex = std::complex<double>;

inline constexpr int kModeCount = 3;
inline constexpr int kDefaultCutoff = 8;

// Occupation numbers of modes a, b, c.
struct FockIndex {
    int n = 0;
    int m = 0;
    int l = 0;

    friend auto operator<=>(const FockIndex&, const FockIndex&) = default;

    int total_photons() const noexcept { return n + m + l; }
    // True when every mode holds at most one photon.
    bool in_qubit_subspace() const noexcept { return n <= 1 && m <= 1 && l <= 1; }
};

// d³ for a uniform per-mode cutoff d.
Eigen::Index hilbert_dimension(int cutoff);

// Row-major flattening with mode a slowest: n·d² + m·d + l.
Eigen::Index flat_index(const FockIndex& idx, int cutoff);
FockIndex unflatten(Eigen::Index k, int cutoff);

// Amplitude vector over the truncated three-mode Fock basis.
class StateVector {
public:
    // Zero vector of length d³.
    explicit StateVector(int cutoff = kDefaultCutoff);
    // Takes ownership of a d³-long amplitude vector.
    StateVector(int cutoff, Eigen::VectorXcd amplitudes);

    int cutoff() const noexcept { return cutoff_; }
    Eigen::Index dimension() const noexcept { return amplitudes_.size(); }

    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    Eigen::VectorXcd& amplitudes() noexcept { return amplitudes_; }

    Complex operator[](const FockIndex& idx) const { return amplitudes_(flat_index(idx, cutoff_)); }
    Complex& operator[](const FockIndex& idx) { return amplitudes_(flat_index(idx, cutoff_)); }

    double norm() const { return amplitudes_.norm(); }

private:
    int cutoff_;
    Eigen::VectorXcd amplitudes_;
};

StateVector basis_state(const FockIndex& idx, int cutoff);

// Σ conj(a_k) b_k; throws DimensionMismatch when the cutoffs differ.
Complex inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& psi);

} // namespace scissors
