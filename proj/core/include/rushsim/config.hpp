#ifndef RUSHSIM_CONFIG_HPP
#define RUSHSIM_CONFIG_HPP

#include <string>
#include <string_view>

#include "rushsim/engine.hpp"
#include "rushsim/sweep.hpp"

namespace rushsim {

/// Parsed flat `key = value` config file. `layout` names a layout file;
/// empty means the built-in default layout.
struct FileConfig {
  SimulationConfig sim;
  std::string layout_path;
};

/// Keys match SimulationConfig fields (duration_seconds, seed,
/// checkout_service_seconds, pathfind_mode, accrual, log_events,
/// greedy_by_path, max_distance_feet, threshold_seconds, seed_fraction,
/// newly_infected_spread, layout) plus repeated `phase = start_s,end_s,rate_per_s`
/// lines. '#' starts a comment. Unknown keys are ConfigError.
FileConfig parse_config(std::string_view text);

/// Sweep spec file: the same format with comma-separated list values for
/// distances_feet, thresholds_seconds, seed_fractions, spread_flags, seeds,
/// plus any simulate key for the base config.
struct FileSweepSpec {
  SweepSpec spec;
  std::string layout_path;
};
FileSweepSpec parse_sweep_spec(std::string_view text);

std::string to_string(PathfindMode mode);
std::string to_string(AccrualRule rule);
PathfindMode pathfind_mode_from(std::string_view s);  // throws ConfigError
AccrualRule accrual_rule_from(std::string_view s);    // throws ConfigError

}  // namespace rushsim

#endif
