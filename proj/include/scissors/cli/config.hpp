#pragma once

#include "scissors/fock_space.hpp"
#include "scissors/hamiltonian.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scissors::cli {

enum class Scenario { Undriven, Driven, Compare, Sweep, WTimes };

std::string_view scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

// A rejected configuration entry. key() names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Scenario scenario = Scenario::Undriven;
    SystemParams params;
    FockIndex initial_state{0, 0, 1};
    double t_max = 60.0;
    // Output sampling interval.
    double dt = 0.05;
    // Number of W times reported by the w-times scenario.
    int w_count = 6;
    // Kerr constants visited by the sweep scenario (applied to all three modes).
    std::vector<double> sweep_chi{30.0, 100.0, 300.0};
    // Empty means standard output.
    std::string output_path;

    Eigen::Index hilbert_dimension() const { return scissors::hilbert_dimension(params.cutoff); }
};

// A `key = value` pair applied on top of the document (command-line flags).
struct ConfigOverride {
    std::string key;
    std::string value;
};

// Largest cutoff accepted; the spectral path diagonalizes a dense d³ × d³ matrix.
inline constexpr int kMaxCutoff = 16;

// Parses a flat `key = value` document (`#` starts a comment), applies the
// overrides, fills scenario-dependent defaults and validates the result.
// Real-valued keys accept plain numbers or products/quotients with `pi`
// (e.g. `pi/30`); drive amplitudes additionally accept `(re, im)`.
RunConfig parse_config(std::string_view source, std::span<const ConfigOverride> overrides = {});

// Reads the file (IoError if unreadable) and forwards to parse_config.
RunConfig load_config(const std::filesystem::path& path,
                      std::span<const ConfigOverride> overrides = {});

} // namespace scissors::cli
