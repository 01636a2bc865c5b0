#pragma once

#include "nwp/grid.hpp"
#include "nwp/propagator.hpp"
#include "nwp/scenario.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace nwp {

/// Raised for malformed config files: syntax errors, unknown keys, missing
/// required keys, wrong value types. Distinct from invariant violations so
/// the CLI can map the two to different exit codes.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double x_min = -40.0;
    double x_max = 40.0;
    std::size_t n = 4096;
};

struct RunConfig {
    ScenarioParams scenario;
    GridSpec grid;
    EvolutionConfig evolution;
    std::optional<Window> window; ///< default: grid minus 15% margins
    double t_end = 2.0;
    std::size_t sample_every = 10;
    std::string output_path; ///< empty means stdout
    long seed = 0;           ///< reserved; no stochastic component yet

    Grid1D make_grid_checked() const;
    Window effective_window(const Grid1D& g) const;
    std::size_t total_steps() const;
};

/// Parse a config from JSON text. Unknown keys anywhere are errors and the
/// diagnostic names the offending key.
RunConfig parse_run_config(const std::string& json_text);

/// Load and parse a config file.
RunConfig load_run_config(const std::string& path);

} // namespace nwp
