#pragma once

#include "nwp/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace nwp {

/// CLI exit codes shared by the command layer and the binary.
enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kConfigError = 2,
    kInvariantError = 3,
    kAcceptanceFailure = 4,
};

/// Drive the split-operator evolution; CSV columns
/// t, x_mode, d_analytic, norm_window, boundary_flag.
int cmd_simulate(const RunConfig& cfg, std::ostream& out);

/// Operator decomposition diagnostics; CSV columns t, e_tilde,
/// eigen_residual plus a '#' block echoing the coefficient vectors.
int cmd_decompose(const RunConfig& cfg, std::ostream& out);

/// Hamilton dynamics under h_c; CSV columns t, x_classical, p_classical,
/// d_analytic.
int cmd_classical(const RunConfig& cfg, std::ostream& out);

/// Classical-vs-quantum comparison; classical columns plus x_mode_quantum
/// and a '#' PASS/FAIL summary line per criterion. Returns
/// kAcceptanceFailure if any row fails.
int cmd_compare(const RunConfig& cfg, std::ostream& out);

/// Full argv-level entry point (everything after the program name).
/// Writes CSV to --out / output_path / stdout and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nwp
