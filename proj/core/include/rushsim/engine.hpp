#ifndef RUSHSIM_ENGINE_HPP
#define RUSHSIM_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rushsim/agents.hpp"
#include "rushsim/arrivals.hpp"
#include "rushsim/exposure.hpp"
#include "rushsim/grid.hpp"
#include "rushsim/pathfind.hpp"

namespace rushsim {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Everything one run needs besides the layout itself. 1 s ticks are fixed:
/// 5 ft/s over 5' cells is one cell per tick and exposure accrues per
/// second.
struct SimulationConfig {
  ArrivalSchedule schedule = ArrivalSchedule::black_friday();
  ExposureParams exposure;
  int duration_seconds = 14400;
  std::uint64_t seed = 1;
  int checkout_service_seconds = 12;
  PathfindMode pathfind_mode = PathfindMode::Standard;
  AccrualRule accrual = AccrualRule::PerTick;
  bool greedy_by_path = false;
  bool log_events = false;

  void validate() const;  // throws ConfigError
};

struct Event {
  int tick;
  int customer_id;
  std::string event;
  std::string detail;
};

struct CustomerRecord {
  int id;
  int entry_tick;
  int exit_tick;  // -1 if still in store at cutoff
  int exposure_seconds;
  InfectionKind status;
  int infected_at_tick;  // -1 unless NewlyInfected
  int cells_traversed;
  int waited_ticks;
  int checkout_service;
};

/// Per-run outputs. Infection counts follow the exited-only rule: customers
/// still inside at cutoff appear in spawned/still_in_store and in the
/// per-customer records but not in the headline counts.
struct RunResult {
  int total_customers = 0;     // exited within the duration
  int starting_infective = 0;  // seed infectives among exited
  int newly_infected = 0;      // newly infected among exited
  int spawned = 0;
  int still_in_store = 0;
  int infected_in_store = 0;   // newly infected still inside at cutoff
  std::vector<CustomerRecord> records;
  std::vector<Event> events;   // empty unless log_events
  SimulationConfig config;
};

/// One simulation run. Per tick: spawn arrivals, advance customers in
/// ascending id order, accrue exposure, infection checks, record. Movement
/// never reads infection state, so trajectories depend only on the seed and
/// layout.
class Engine {
 public:
  Engine(const StoreLayout& layout, const SimulationConfig& config);
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  /// Applies one tick (all five phases). Precondition: current_tick() <
  /// duration.
  void tick();

  void run_to(int tick);
  int current_tick() const { return tick_; }
  const std::vector<Customer>& customers() const { return customers_; }
  const StoreLayout& layout() const { return layout_; }
  const SimulationConfig& config() const { return config_; }

  /// Counts and records as of the current tick.
  RunResult result() const;

 private:
  struct Log;
  void spawn_phase();
  void advance_phase();

  const StoreLayout& layout_;
  SimulationConfig config_;
  SplitMix64 rng_;
  PathPlanner planner_;
  NeighborhoodMask mask_;
  ExposureScratch scratch_;
  ArrivalState arrival_state_;
  std::vector<Customer> customers_;
  std::vector<char> register_busy_;
  std::unique_ptr<Log> log_;
  int tick_ = 0;
};

/// Convenience: construct, run the full duration, collect the result.
RunResult run(const StoreLayout& layout, const SimulationConfig& config);

}  // namespace rushsim

#endif
