#pragma once

#include "scissors/cli/config.hpp"

#include <iosfwd>
#include <string>

namespace scissors::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitConfigError = 1,
    kExitNumericalError = 2,
    kExitIoError = 3,
};

// Compute the scenario and write its CSV (header row, LF endings, 15 significant
// digits) to `csv`. Library exceptions propagate.
//
//   undriven, driven  t, P_000 .. P_111, leakage, w_fid_phase_opt, norm
//   compare           t, P_xxx_trunc (8), P_xxx_exact (8), leakage_exact, max_abs_dev
//   sweep             chi, mean_leakage, max_leakage, max_abs_dev
//   w-times           n, t_n, t_scan, P_001, P_010, P_100, w_fid_phase_opt
void write_scenario(const RunConfig& cfg, std::ostream& csv);

// Runs write_scenario against cfg.output_path (stdout when empty), reporting
// failures on `log` and mapping them onto ExitCode.
int run_scenario(const RunConfig& cfg, std::ostream& log);

std::string format_number(double value);

} // namespace scissors::cli
