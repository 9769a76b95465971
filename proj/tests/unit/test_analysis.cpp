#include "scissors/analysis.hpp"
#include "scissors/errors.hpp"
#include "scissors/propagator.hpp"
#include "scissors/truncated_model.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace scissors;

namespace {

constexpr double kEps = std::numbers::pi / 30.0;
const std::array<FockIndex, 3> kSingles{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};

StateVector w_state(int cutoff) {
    StateVector psi(cutoff);
    for (const auto& idx : kSingles) {
        psi[idx] = 1.0 / std::sqrt(3.0);
    }
    return psi;
}

// Brute-force phase optimisation of the W overlap over two relative phases
// (the global phase drops out of |<W|psi>|²).
double phase_scan_w_fidelity(const StateVector& psi, int steps) {
    double best = 0.0;
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            const double pb = 2.0 * std::numbers::pi * i / steps;
            const double pc = 2.0 * std::numbers::pi * j / steps;
            const Complex overlap = psi[{1, 0, 0}] + std::polar(1.0, pb) * psi[{0, 1, 0}] +
                                    std::polar(1.0, pc) * psi[{0, 0, 1}];
            best = std::max(best, std::norm(overlap) / 3.0);
        }
    }
    return best;
}

} // namespace

TEST_CASE("target states") {
    const TargetState w = TargetState::w();
    const TargetState ghz = TargetState::ghz();
    CHECK(w.kind == TargetState::Kind::W);
    CHECK(ghz.kind == TargetState::Kind::GHZ);
    double wn = 0.0, gn = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        wn += std::norm(w.amplitudes[k]);
        gn += std::norm(ghz.amplitudes[k]);
    }
    CHECK(wn == doctest::Approx(1.0));
    CHECK(gn == doctest::Approx(1.0));
    CHECK(std::abs(ghz.amplitudes[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(ghz.amplitudes[7] - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("probabilities") {
    const std::array<FockIndex, 1> only001{{{0, 0, 1}}};
    CHECK(probabilities(basis_state({0, 0, 1}, 8), only001)[0] == 1.0);
    const std::array<FockIndex, 1> outside{{{8, 0, 0}}};
    CHECK_THROWS_AS(probabilities(basis_state({0, 0, 1}, 8), outside), std::out_of_range);

    const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    const StateVector psi0 = basis_state({0, 0, 1}, 8);
    for (double p : probabilities(prop.evolve(psi0, w_time(1, kEps)), kSingles)) {
        CHECK(std::abs(p - 1.0 / 3.0) < 1e-10);
    }
    // max of (2 − 2cos 3εt)/9
    const std::array<FockIndex, 1> only100{{{1, 0, 0}}};
    const double t_peak = std::numbers::pi / (3.0 * kEps);
    CHECK(std::abs(probabilities(prop.evolve(psi0, t_peak), only100)[0] - 4.0 / 9.0) < 1e-10);
    CHECK(std::abs(oracle::p100_undriven(kEps, t_peak) - 4.0 / 9.0) < 1e-15);

    std::mt19937_64 rng(59);
    const StateVector random(3, oracle::random_unit_vector(rng, 27));
    std::vector<FockIndex> all;
    for (Eigen::Index k = 0; k < 27; ++k) {
        all.push_back(unflatten(k, 3));
    }
    double total = 0.0;
    for (double p : probabilities(random, all)) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        total += p;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("leakage") {
    std::mt19937_64 rng(61);
    CHECK(leakage(embed(closed_form_driven(kEps, 3.3), 8)) == 0.0);
    CHECK(leakage(basis_state({2, 0, 0}, 8)) == 1.0);

    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi(4, oracle::random_unit_vector(rng, 64));
        const double leak = leakage(psi);
        double inside = 0.0;
        for (int bits = 0; bits < 8; ++bits) {
            inside += std::norm(psi[{bits >> 2, (bits >> 1) & 1, bits & 1}]);
        }
        CHECK(leak >= 0.0);
        CHECK(leak <= 1.0);
        CHECK(std::abs(leak + inside - 1.0) < 1e-12);
    }

    const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    for (double t : {0.5, 7.0, 33.3, 59.0}) {
        CHECK(leakage(prop.evolve(basis_state({0, 0, 1}, 8), t)) <= 1e-12);
    }
}

TEST_CASE("fidelity") {
    CHECK(fidelity(w_state(8), TargetState::w()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(basis_state({0, 0, 1}, 8), TargetState::w()) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(fidelity(basis_state({1, 1, 1}, 2), TargetState::ghz()) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(fidelity(StateVector(1), TargetState::w()), DimensionMismatch);

    // <W|Ψ(t_1)> = e^{−2iεt_1}/√3, so the canonical fidelity is only 1/3.
    const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    const StateVector psi = prop.evolve(basis_state({0, 0, 1}, 8), w_time(1, kEps));
    Complex direct{};
    for (const auto& idx : kSingles) {
        direct += psi[idx] / std::sqrt(3.0);
    }
    CHECK(std::abs(fidelity(psi, TargetState::w()) - std::norm(direct)) < 1e-14);
    CHECK(std::abs(fidelity(psi, TargetState::w()) - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("phase-optimal W fidelity") {
    CHECK(w_fidelity_phase_optimal(w_state(8)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w_fidelity_phase_optimal(basis_state({0, 0, 0}, 8)) == 0.0);

    const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    for (int n = 1; n <= 6; ++n) {
        const StateVector psi = prop.evolve(basis_state({0, 0, 1}, 8), w_time(n, kEps));
        CHECK(w_fidelity_phase_optimal(psi) >= 1.0 - 1e-9);
        const QubitAmplitudes q = closed_form_undriven(kEps, w_time(n, kEps));
        CHECK(w_fidelity_phase_optimal(embed(q, 2)) >= 1.0 - 1e-12);
    }

    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi(3, oracle::random_unit_vector(rng, 27));
        const double opt = w_fidelity_phase_optimal(psi);
        CHECK(opt + 1e-15 >= fidelity(psi, TargetState::w()));
        CHECK(opt + 1e-12 >= phase_scan_w_fidelity(psi, 90));
        CHECK(opt - phase_scan_w_fidelity(psi, 720) < 1e-4);

        StateVector rotated = psi;
        for (const auto& idx : kSingles) {
            rotated[idx] *= std::polar(1.0, angle(rng));
        }
        CHECK(std::abs(w_fidelity_phase_optimal(rotated) - opt) < 1e-12);
    }
}

TEST_CASE("trajectory deviations") {
    const auto grid = uniform_time_grid(10.0, 1.0);
    const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    const Trajectory a = evolve_spectral(prop, basis_state({0, 0, 1}, 8), grid);
    CHECK(trajectory_max_deviation(a, a, Observable::P001) == 0.0);
    CHECK(trajectory_max_probability_deviation(a, a) == 0.0);

    Trajectory shifted = a;
    shifted.times[3] += 0.5;
    CHECK_THROWS_AS(trajectory_max_deviation(a, shifted, Observable::P001), DimensionMismatch);
    Trajectory shorter = a;
    shorter.times.pop_back();
    shorter.records.pop_back();
    CHECK_THROWS_AS(trajectory_max_deviation(a, shorter, Observable::Norm), DimensionMismatch);
    CHECK_THROWS_AS(trajectory_max_state_deviation(a, a), std::invalid_argument);
}

TEST_CASE("observable names round-trip") {
    for (Observable obs : kAllObservables) {
        CHECK(parse_observable(observable_name(obs)) == obs);
    }
    CHECK_FALSE(parse_observable("P_222").has_value());
}

TEST_CASE("driven truncated vs full P_000 deviation regression at chi = 30") {
    // Measured once on the default 0..60 grid with dt = 0.05; guards against silent drift.
    constexpr double kBaseline = 3.961129648196e-02;
    const auto grid = uniform_time_grid(60.0, 0.05);
    const Trajectory full = evolve_spectral(
        SpectralPropagator(build_hamiltonian(SystemParams::driven_default())),
        basis_state({0, 0, 0}, 8), grid);
    const auto truncated =
        integrate_truncated(QubitAmplitudes::basis(0, 0, 0), kEps, Drives::uniform(kEps), grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double p_trunc = observe(embed(truncated[k], 2)).qubit_probabilities[0];
        worst = std::max(worst, std::abs(p_trunc - full.records[k].qubit_probabilities[0]));
    }
    CHECK(worst == doctest::Approx(kBaseline).epsilon(1e-6));
}
