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

// Shared 512×512 decomposition for the default parameter set.
const SpectralPropagator& undriven_propagator() {
    static const SpectralPropagator prop(build_hamiltonian(SystemParams::undriven_default()));
    return prop;
}

} // namespace

TEST_CASE("zero matrix decomposes to zero eigenvalues") {
    SystemParams p;
    p.chi_a = p.chi_b = p.chi_c = 0.0;
    p.epsilon = 0.0;
    p.cutoff = 3;
    const SpectralPropagator prop(build_hamiltonian(p));
    CHECK(prop.eigenvalues().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("diagonal Hamiltonian eigenvalues are the sorted diagonal") {
    SystemParams p;
    p.chi_a = 3.0;
    p.chi_b = 5.0;
    p.chi_c = -1.0;
    p.epsilon = 0.0;
    p.cutoff = 3;
    const HamiltonianMatrix h = build_hamiltonian(p);
    std::vector<double> diag;
    for (Eigen::Index k = 0; k < h.dimension(); ++k) {
        diag.push_back(h.matrix().coeff(k, k).real());
    }
    std::sort(diag.begin(), diag.end());
    const SpectralPropagator prop(h);
    for (std::size_t k = 0; k < diag.size(); ++k) {
        CHECK(prop.eigenvalues()(static_cast<Eigen::Index>(k)) == doctest::Approx(diag[k]));
    }
}

TEST_CASE("one-photon sector spectrum is {-eps, -eps, 2 eps}") {
    // 3×3 block with zero diagonal and ε everywhere else: λ³ − 3ε²λ − 2ε³ = 0.
    const auto roots = oracle::depressed_cubic_roots(-3.0 * kEps * kEps, -2.0 * kEps * kEps * kEps);
    CHECK(roots[0] == doctest::Approx(-kEps).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(-kEps).epsilon(1e-6));
    CHECK(roots[2] == doctest::Approx(2.0 * kEps).epsilon(1e-12));

    // The sector's eigenvectors are the only ones with weight on 001, 010, 100.
    const SpectralPropagator& prop = undriven_propagator();
    std::vector<double> sector;
    for (Eigen::Index k = 0; k < prop.eigenvalues().size(); ++k) {
        const auto v = prop.eigenvectors().col(k);
        const double weight = std::norm(v(1)) + std::norm(v(8)) + std::norm(v(64));
        if (weight > 0.5) {
            sector.push_back(prop.eigenvalues()(k));
        }
    }
    REQUIRE(sector.size() == 3);
    std::sort(sector.begin(), sector.end());
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(std::abs(sector[k] - roots[k]) < 1e-10);
    }
    CHECK(std::abs(sector[0] + std::numbers::pi / 30.0) < 1e-10);
    CHECK(std::abs(sector[2] - std::numbers::pi / 15.0) < 1e-10);
}

TEST_CASE("decomposition reconstructs H and is unitary") {
    const HamiltonianMatrix h = build_hamiltonian(SystemParams::driven_default());
    const SpectralPropagator prop(h);
    const auto& v = prop.eigenvectors();
    const Eigen::MatrixXcd rebuilt =
        v * prop.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint();
    CHECK((rebuilt - h.dense()).cwiseAbs().maxCoeff() <= 1e-10 * h.max_abs());
    const auto eye = Eigen::MatrixXcd::Identity(v.rows(), v.cols());
    CHECK((v.adjoint() * v - eye).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("non-Hermitian input is rejected") {
    SparseMatrix m(8, 8);
    m.insert(0, 1) = 1.0;
    CHECK_THROWS_AS(SpectralPropagator(HamiltonianMatrix(2, m)), ParameterError);
}

TEST_CASE("spectral evolution matches a Pade matrix exponential") {
    std::mt19937_64 rng(17);
    SystemParams p;
    p.cutoff = 3;
    p.chi_a = 2.0;
    p.chi_b = -1.0;
    p.chi_c = 0.5;
    p.epsilon = Complex{0.3, 0.1};
    p.alpha = Complex{0.2, 0.0};
    p.gamma = Complex{0.0, -0.4};
    const SpectralPropagator prop(build_hamiltonian(p));
    const StateVector psi0(3, oracle::random_unit_vector(rng, 27));
    for (double t : {0.0, 0.37, 2.0, 11.5}) {
        const Eigen::VectorXcd expected =
            oracle::propagator_by_pade(oracle::dense_hamiltonian(p), t) * psi0.amplitudes();
        CHECK((evolve_spectral(prop, psi0, t).amplitudes() - expected).norm() < 1e-11);
    }
}

TEST_CASE("evolve_spectral on the default setup") {
    const SpectralPropagator& prop = undriven_propagator();
    const StateVector psi0 = basis_state({0, 0, 1}, 8);

    SUBCASE("t = 0 is the identity") {
        CHECK((evolve_spectral(prop, psi0, 0.0).amplitudes() - psi0.amplitudes()).norm() < 1e-12);
    }
    SUBCASE("full revival at 2 pi / (3 eps)") {
        const StateVector psi = evolve_spectral(prop, psi0, 2.0 * std::numbers::pi / (3.0 * kEps));
        CHECK(std::abs(std::abs(psi[{0, 0, 1}]) - 1.0) < 1e-10);
        CHECK(std::abs(inner_product(psi0, psi)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("equal thirds at the first W time") {
        const StateVector psi = evolve_spectral(prop, psi0, 2.0 * std::numbers::pi / (9.0 * kEps));
        const std::array<FockIndex, 3> singles{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
        for (double prob : probabilities(psi, singles)) {
            CHECK(std::abs(prob - 1.0 / 3.0) < 1e-10);
        }
    }
    SUBCASE("norm is preserved") {
        for (double t : {1.0, 17.0, 99.0}) {
            CHECK(std::abs(evolve_spectral(prop, psi0, t).norm() - 1.0) < 1e-10);
        }
    }
    SUBCASE("cutoff mismatch") {
        CHECK_THROWS_AS(evolve_spectral(prop, basis_state({0, 0, 1}, 4), 1.0), DimensionMismatch);
    }
}

TEST_CASE("group property of the spectral propagator") {
    std::mt19937_64 rng(19);
    const SpectralPropagator prop(build_hamiltonian(SystemParams::driven_default()));
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_real_distribution<double> time(0.0, 30.0);
        const double t1 = time(rng);
        const double t2 = time(rng);
        const StateVector psi(8, oracle::random_unit_vector(rng, 512));
        const StateVector two_steps = prop.evolve(prop.evolve(psi, t1), t2);
        const StateVector one_step = prop.evolve(psi, t1 + t2);
        CHECK((two_steps.amplitudes() - one_step.amplitudes()).norm() <= 1e-9);
    }
}

TEST_CASE("spectral trajectory records observables") {
    const auto grid = uniform_time_grid(20.0, 0.5);
    REQUIRE(grid.size() == 41);
    const Trajectory traj = evolve_spectral(undriven_propagator(), basis_state({0, 0, 1}, 8), grid,
                                            {.record_states = true});
    REQUIRE(traj.states.size() == grid.size());
    const HamiltonianMatrix number = total_photon_number_matrix(8);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double t = traj.times[k];
        CHECK(std::abs(traj.records[k].qubit_probabilities[1] - oracle::p001_undriven(kEps, t)) <
              1e-10);
        CHECK(traj.records[k].leakage <= 1e-12);
        CHECK(std::abs(traj.records[k].norm - 1.0) <= 1e-8);
        const StateVector n_psi = apply_hamiltonian(number, traj.states[k]);
        CHECK(std::abs(inner_product(traj.states[k], n_psi) - 1.0) <= 1e-10);
    }
}

TEST_CASE("RK4 amplitude integration") {
    SUBCASE("zero Hamiltonian keeps the state constant") {
        SystemParams p;
        p.chi_a = p.chi_b = p.chi_c = 0.0;
        p.epsilon = 0.0;
        p.cutoff = 3;
        std::mt19937_64 rng(23);
        const StateVector psi0(3, oracle::random_unit_vector(rng, 27));
        const auto grid = uniform_time_grid(5.0, 1.0);
        const Trajectory traj = integrate_amplitude_odes(p, psi0, grid, {.record_states = true});
        for (const auto& s : traj.states) {
            CHECK((s.amplitudes() - psi0.amplitudes()).norm() == 0.0);
        }
    }
    SUBCASE("undriven P_001 follows (5 + 4cos 3 eps t)/9 with no leakage") {
        const auto grid = uniform_time_grid(20.0, 0.25);
        const Trajectory traj = integrate_amplitude_odes(SystemParams::undriven_default(),
                                                         basis_state({0, 0, 1}, 8), grid);
        for (std::size_t k = 0; k < traj.size(); ++k) {
            CHECK(std::abs(traj.records[k].qubit_probabilities[1] -
                           oracle::p001_undriven(kEps, traj.times[k])) < 1e-9);
            CHECK(traj.records[k].leakage <= 1e-12);
        }
    }
    SUBCASE("agrees with the spectral path on a driven run") {
        const SystemParams p = SystemParams::driven_default();
        const auto grid = uniform_time_grid(10.0, 1.0);
        const StateVector psi0 = basis_state({0, 0, 0}, 8);
        const Trajectory ode = integrate_amplitude_odes(p, psi0, grid, {.record_states = true});
        const Trajectory exact = evolve_spectral(SpectralPropagator(build_hamiltonian(p)), psi0,
                                                 grid, {.record_states = true});
        CHECK(trajectory_max_state_deviation(ode, exact) <= 1e-8);
    }
    SUBCASE("an oversized step trips the norm sentinel") {
        const auto grid = uniform_time_grid(1.0, 0.5);
        CHECK_THROWS_AS(integrate_amplitude_odes(SystemParams::driven_default(),
                                                 basis_state({0, 0, 0}, 8), grid,
                                                 {.max_step = 0.05}),
                        IntegrationError);
    }
    SUBCASE("unnormalized initial state is rejected") {
        StateVector psi(2);
        psi[{0, 0, 1}] = 2.0;
        const std::vector<double> grid{0.0, 1.0};
        CHECK_THROWS_AS(integrate_amplitude_odes(SystemParams{.cutoff = 2}, psi, grid),
                        ParameterError);
    }
    SUBCASE("non-increasing grid is rejected") {
        const std::vector<double> grid{0.0, 1.0, 1.0};
        CHECK_THROWS_AS(integrate_amplitude_odes(SystemParams{.cutoff = 2},
                                                 basis_state({0, 0, 1}, 2), grid),
                        ParameterError);
    }
}

TEST_CASE("uniform_time_grid") {
    CHECK(uniform_time_grid(0.0, 0.1).size() == 1);
    const auto g = uniform_time_grid(1.0, 0.1);
    CHECK(g.size() == 11);
    CHECK(g.back() == doctest::Approx(1.0));
    CHECK_THROWS_AS(uniform_time_grid(1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(uniform_time_grid(-1.0, 0.1), ParameterError);
}
