#include "scissors/cli/scenario.hpp"

#include "scissors/analysis.hpp"
#include "scissors/errors.hpp"
#include "scissors/propagator.hpp"
#include "scissors/truncated_model.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

namespace scissors::cli {

namespace {

constexpr std::array<std::string_view, 8> kQubitLabels = {"000", "001", "010", "011",
                                                          "100", "101", "110", "111"};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    CsvWriter& cell(std::string_view text) {
        if (!first_) {
            out_ << ',';
        }
        out_ << text;
        first_ = false;
        return *this;
    }
    CsvWriter& cell(double value) { return cell(format_number(value)); }
    CsvWriter& cell(int value) { return cell(std::to_string(value)); }

    void end_row() {
        out_ << '\n';
        first_ = true;
    }

private:
    std::ostream& out_;
    bool first_ = true;
};

Drives drives_of(const SystemParams& p) { return Drives{p.alpha, p.beta, p.gamma}; }

Trajectory exact_trajectory(const SystemParams& p, const FockIndex& initial,
                            const std::vector<double>& grid) {
    const SpectralPropagator prop(build_hamiltonian(p));
    return evolve_spectral(prop, basis_state(initial, p.cutoff), grid);
}

Trajectory truncated_trajectory(const RunConfig& cfg, const std::vector<double>& grid) {
    const auto& s = cfg.initial_state;
    const auto amplitudes = integrate_truncated(QubitAmplitudes::basis(s.n, s.m, s.l),
                                                cfg.params.epsilon.real(),
                                                drives_of(cfg.params), grid);
    Trajectory traj;
    traj.times = grid;
    traj.records.reserve(amplitudes.size());
    for (const auto& q : amplitudes) {
        traj.records.push_back(observe(embed(q, 2)));
    }
    return traj;
}

void write_trajectory(const RunConfig& cfg, std::ostream& out) {
    const auto grid = uniform_time_grid(cfg.t_max, cfg.dt);
    const Trajectory traj = exact_trajectory(cfg.params, cfg.initial_state, grid);

    CsvWriter csv(out);
    csv.cell("t");
    for (Observable obs : kAllObservables) {
        csv.cell(observable_name(obs));
    }
    csv.end_row();
    for (std::size_t k = 0; k < traj.size(); ++k) {
        csv.cell(traj.times[k]);
        for (Observable obs : kAllObservables) {
            csv.cell(observable_value(traj.records[k], obs));
        }
        csv.end_row();
    }
}

void write_compare(const RunConfig& cfg, std::ostream& out) {
    const auto grid = uniform_time_grid(cfg.t_max, cfg.dt);
    const Trajectory exact = exact_trajectory(cfg.params, cfg.initial_state, grid);
    const Trajectory truncated = truncated_trajectory(cfg, grid);

    CsvWriter csv(out);
    csv.cell("t");
    for (auto label : kQubitLabels) {
        csv.cell("P_" + std::string(label) + "_trunc");
    }
    for (auto label : kQubitLabels) {
        csv.cell("P_" + std::string(label) + "_exact");
    }
    csv.cell("leakage_exact").cell("max_abs_dev");
    csv.end_row();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto& pt = truncated.records[k].qubit_probabilities;
        const auto& pe = exact.records[k].qubit_probabilities;
        double worst = 0.0;
        csv.cell(grid[k]);
        for (double v : pt) {
            csv.cell(v);
        }
        for (std::size_t b = 0; b < pe.size(); ++b) {
            csv.cell(pe[b]);
            worst = std::max(worst, std::abs(pe[b] - pt[b]));
        }
        csv.cell(exact.records[k].leakage).cell(worst);
        csv.end_row();
    }
}

struct SweepPoint {
    double chi = 0.0;
    double mean_leakage = 0.0;
    double max_leakage = 0.0;
    double max_abs_dev = 0.0;
};

void write_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto grid = uniform_time_grid(cfg.t_max, cfg.dt);
    const Trajectory truncated = truncated_trajectory(cfg, grid);

    // Points are independent; each runs its own decomposition on a worker.
    std::vector<std::future<SweepPoint>> jobs;
    jobs.reserve(cfg.sweep_chi.size());
    for (double chi : cfg.sweep_chi) {
        jobs.push_back(std::async(std::launch::async, [&cfg, &grid, &truncated, chi] {
            SystemParams p = cfg.params;
            p.chi_a = p.chi_b = p.chi_c = chi;
            const Trajectory exact = exact_trajectory(p, cfg.initial_state, grid);
            SweepPoint point{chi};
            for (const auto& rec : exact.records) {
                point.mean_leakage += rec.leakage;
                point.max_leakage = std::max(point.max_leakage, rec.leakage);
            }
            point.mean_leakage /= static_cast<double>(exact.records.size());
            point.max_abs_dev = trajectory_max_probability_deviation(exact, truncated);
            return point;
        }));
    }

    CsvWriter csv(out);
    csv.cell("chi").cell("mean_leakage").cell("max_leakage").cell("max_abs_dev");
    csv.end_row();
    for (auto& job : jobs) {
        const SweepPoint point = job.get();
        csv.cell(point.chi).cell(point.mean_leakage).cell(point.max_leakage).cell(point.max_abs_dev);
        csv.end_row();
    }
}

void write_w_times(const RunConfig& cfg, std::ostream& out) {
    const double eps = cfg.params.epsilon.real();
    const auto scanned = scan_w_times(cfg.w_count, eps);
    const SpectralPropagator prop(build_hamiltonian(cfg.params));
    const StateVector psi0 = basis_state(cfg.initial_state, cfg.params.cutoff);

    CsvWriter csv(out);
    csv.cell("n").cell("t_n").cell("t_scan").cell("P_001").cell("P_010").cell("P_100").cell(
        "w_fid_phase_opt");
    csv.end_row();
    for (int n = 1; n <= cfg.w_count; ++n) {
        const double t = w_time(n, eps);
        const StateVector psi = prop.evolve(psi0, t);
        csv.cell(n).cell(t).cell(scanned[static_cast<std::size_t>(n - 1)]);
        csv.cell(std::norm(psi[{0, 0, 1}]))
            .cell(std::norm(psi[{0, 1, 0}]))
            .cell(std::norm(psi[{1, 0, 0}]))
            .cell(w_fidelity_phase_optimal(psi));
        csv.end_row();
    }
}

} // namespace

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const int written = std::snprintf(buf.data(), buf.size(), "%.15g", value);
    return std::string(buf.data(), static_cast<std::size_t>(std::max(written, 0)));
}

void write_scenario(const RunConfig& cfg, std::ostream& csv) {
    switch (cfg.scenario) {
    case Scenario::Undriven:
    case Scenario::Driven: write_trajectory(cfg, csv); break;
    case Scenario::Compare: write_compare(cfg, csv); break;
    case Scenario::Sweep: write_sweep(cfg, csv); break;
    case Scenario::WTimes: write_w_times(cfg, csv); break;
    }
}

int run_scenario(const RunConfig& cfg, std::ostream& log) {
    std::ostringstream buffer;
    try {
        write_scenario(cfg, buffer);
    } catch (const IntegrationError& e) {
        log << "numerical error: " << e.what() << '\n';
        return kExitNumericalError;
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        log << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    }

    if (cfg.output_path.empty()) {
        std::cout << buffer.str() << std::flush;
        return std::cout ? kExitSuccess : kExitIoError;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        log << "i/o error: cannot open " << cfg.output_path << " for writing\n";
        return kExitIoError;
    }
    file << buffer.str();
    file.close();
    if (!file) {
        log << "i/o error: failed writing " << cfg.output_path << '\n';
        return kExitIoError;
    }
    return kExitSuccess;
}

} // namespace scissors::cli
