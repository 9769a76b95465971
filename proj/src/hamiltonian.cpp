#include "scissors/hamiltonian.hpp"

#include "scissors/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace scissors {

void SystemParams::validate() const {
    if (cutoff < 2) {
        throw ParameterError("cutoff must be >= 2 so the qubit subspace exists, got " +
                             std::to_string(cutoff));
    }
}

HamiltonianMatrix::HamiltonianMatrix(int cutoff, SparseMatrix matrix)
    : cutoff_(cutoff), matrix_(std::move(matrix)) {
    const Eigen::Index dim = hilbert_dimension(cutoff);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw DimensionMismatch("operator shape " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + " does not match cutoff " +
                                std::to_string(cutoff));
    }
    matrix_.makeCompressed();
}

Complex HamiltonianMatrix::element(const FockIndex& row, const FockIndex& col) const {
    return matrix_.coeff(flat_index(row, cutoff_), flat_index(col, cutoff_));
}

double HamiltonianMatrix::max_abs() const {
    double result = 0.0;
    for (Eigen::Index k = 0; k < matrix_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) {
            result = std::max(result, std::abs(it.value()));
        }
    }
    return result;
}

namespace {

using Triplet = Eigen::Triplet<Complex>;

class TripletSink {
public:
    explicit TripletSink(int cutoff) : cutoff_(cutoff) {}

    void diagonal(const FockIndex& s, double value) {
        if (value != 0.0) {
            const auto k = flat_index(s, cutoff_);
            triplets_.emplace_back(k, k, value);
        }
    }

    // <to|H|from> += value and the Hermitian conjugate entry.
    void hermitian_pair(const FockIndex& to, const FockIndex& from, Complex value) {
        if (value == Complex{}) {
            return;
        }
        const auto r = flat_index(to, cutoff_);
        const auto c = flat_index(from, cutoff_);
        triplets_.emplace_back(r, c, value);
        triplets_.emplace_back(c, r, std::conj(value));
    }

    SparseMatrix finish() {
        const Eigen::Index dim = hilbert_dimension(cutoff_);
        SparseMatrix m(dim, dim);
        m.setFromTriplets(triplets_.begin(), triplets_.end());
        return m;
    }

private:
    int cutoff_;
    std::vector<Triplet> triplets_;
};

double kerr(double chi, int occupation) {
    return 0.5 * chi * occupation * (occupation - 1);
}

} // namespace

HamiltonianMatrix build_hamiltonian(const SystemParams& p) {
    p.validate();
    const int d = p.cutoff;
    const Eigen::Index dim = hilbert_dimension(d);
    TripletSink sink(d);

    for (Eigen::Index k = 0; k < dim; ++k) {
        const FockIndex s = unflatten(k, d);
        const auto [n, m, l] = s;
        sink.diagonal(s, kerr(p.chi_a, n) + kerr(p.chi_b, m) + kerr(p.chi_c, l));

        // ε a†b: |n,m,l> -> √(n+1)√m |n+1,m-1,l>
        if (n + 1 < d && m > 0) {
            sink.hermitian_pair({n + 1, m - 1, l}, s, p.epsilon * std::sqrt((n + 1.0) * m));
        }
        // ε a†c
        if (n + 1 < d && l > 0) {
            sink.hermitian_pair({n + 1, m, l - 1}, s, p.epsilon * std::sqrt((n + 1.0) * l));
        }
        // ε b†c
        if (m + 1 < d && l > 0) {
            sink.hermitian_pair({n, m + 1, l - 1}, s, p.epsilon * std::sqrt((m + 1.0) * l));
        }

        if (n + 1 < d) {
            sink.hermitian_pair({n + 1, m, l}, s, p.alpha * std::sqrt(n + 1.0));
        }
        if (m + 1 < d) {
            sink.hermitian_pair({n, m + 1, l}, s, p.beta * std::sqrt(m + 1.0));
        }
        if (l + 1 < d) {
            sink.hermitian_pair({n, m, l + 1}, s, p.gamma * std::sqrt(l + 1.0));
        }
    }
    return HamiltonianMatrix(d, sink.finish());
}

StateVector apply_hamiltonian(const HamiltonianMatrix& h, const StateVector& psi) {
    if (h.cutoff() != psi.cutoff()) {
        throw DimensionMismatch("apply_hamiltonian: operator cutoff " +
                                std::to_string(h.cutoff()) + " vs state cutoff " +
                                std::to_string(psi.cutoff()));
    }
    return StateVector(psi.cutoff(), h.matrix() * psi.amplitudes());
}

HamiltonianMatrix total_photon_number_matrix(int cutoff) {
    const Eigen::Index dim = hilbert_dimension(cutoff);
    SparseMatrix m(dim, dim);
    m.reserve(Eigen::VectorXi::Constant(dim, 1));
    for (Eigen::Index k = 0; k < dim; ++k) {
        m.insert(k, k) = static_cast<double>(unflatten(k, cutoff).total_photons());
    }
    return HamiltonianMatrix(cutoff, std::move(m));
}

double hermiticity_defect(const HamiltonianMatrix& h) {
    const SparseMatrix adjoint = h.matrix().adjoint();
    const SparseMatrix diff = h.matrix() - adjoint;
    return HamiltonianMatrix(h.cutoff(), diff).max_abs();
}

double commutator_max_abs(const HamiltonianMatrix& a, const HamiltonianMatrix& b) {
    if (a.cutoff() != b.cutoff()) {
        throw DimensionMismatch("commutator of operators with different cutoffs");
    }
    const SparseMatrix ab = a.matrix() * b.matrix();
    const SparseMatrix ba = b.matrix() * a.matrix();
    return HamiltonianMatrix(a.cutoff(), SparseMatrix(ab - ba)).max_abs();
}

} // namespace scissors
