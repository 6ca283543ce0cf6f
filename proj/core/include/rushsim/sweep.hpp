#ifndef RUSHSIM_SWEEP_HPP
#define RUSHSIM_SWEEP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rushsim/engine.hpp"

namespace rushsim {

/// Factorial grid over the four exposure knobs times a shared seed list.
/// Every combo reuses the same seeds, which (with coupled infective draws
/// and infection-independent movement) makes same-seed comparisons across
/// combos exact.
struct SweepSpec {
  std::vector<double> distances_feet;
  std::vector<int> thresholds_seconds;
  std::vector<double> seed_fractions;
  std::vector<bool> spread_flags;
  std::vector<std::uint64_t> seeds;
  SimulationConfig base;

  std::size_t run_count() const;
  void validate() const;  // throws ConfigError
};

struct SweepRow {
  double distance_ft;
  int threshold_s;
  double seed_fraction;
  bool spread;
  std::uint64_t seed;
  int starting_infective;
  int newly_infected;
  int total_customers;
  int spawned;
  int still_in_store;
};

struct ComboAggregate {
  double distance_ft;
  int threshold_s;
  double seed_fraction;
  bool spread;
  int runs;
  double mean_newly_infected, min_newly_infected, max_newly_infected, stddev_newly_infected;
  double mean_starting_infective;
  double mean_total_customers;
};

struct SweepResult {
  std::vector<SweepRow> rows;            // combo-major, seed-minor order
  std::vector<ComboAggregate> aggregates;
};

/// Runs every combo x seed. Rows land in a fixed order regardless of
/// parallelism; each run is independently deterministic.
SweepResult run_sweep(const StoreLayout& layout, const SweepSpec& spec, int parallelism = 1);

/// The published experiment grids. table2_5: 1% seed fraction, spread off;
/// table6_7: 2%; table8_9: 5%; table10_11: 1% with spread on. All use
/// distances {6,8,10,12} ft and thresholds {120,300,600,900} s, 10 seeds.
SweepSpec paper_preset(std::string_view name);
std::vector<std::string> paper_preset_names();

}  // namespace rushsim

#endif
