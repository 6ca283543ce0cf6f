#include "rushsim/engine.hpp"

#include <cassert>

namespace rushsim {

void SimulationConfig::validate() const {
  if (duration_seconds < 1) throw ConfigError("duration_seconds must be >= 1");
  if (!exposure.valid()) throw ConfigError("exposure parameters out of range");
  if (checkout_service_seconds < 0) throw ConfigError("checkout_service_seconds must be >= 0");
  if (!schedule.covers(duration_seconds))
    throw ConfigError("arrival schedule must cover the full duration");
}

struct Engine::Log : EventSink {
  std::vector<Event> events;
  void on(int tick, int customer_id, const char* event, const std::string& detail) override {
    events.push_back({tick, customer_id, event, detail});
  }
};

Engine::Engine(const StoreLayout& layout, const SimulationConfig& config)
    : layout_(layout),
      config_(config),
      rng_(config.seed),
      planner_(layout, config.pathfind_mode),
      mask_(vulnerable_neighborhood(config.exposure.max_distance_feet, layout.cell_size_feet)) {
  config_.validate();
  if (layout_.products.size() < 8)
    throw ConfigError("layout must offer at least 8 products");
  if (layout_.entrances.empty() || layout_.exits.empty() || layout_.checkouts.empty())
    throw ConfigError("layout must have entrances, exits and checkouts");
  register_busy_.assign(layout_.checkouts.size(), 0);
  if (config_.log_events) log_ = std::make_unique<Log>();
}

Engine::~Engine() = default;

void Engine::spawn_phase() {
  const int due = arrivals_due(config_.schedule, tick_, arrival_state_);
  AdvanceContext ctx{layout_,
                     planner_,
                     register_busy_,
                     config_.checkout_service_seconds,
                     config_.greedy_by_path,
                     log_.get()};
  for (int i = 0; i < due; ++i) {
    Customer c = spawn_customer(rng_, layout_, config_.exposure.seed_fraction, tick_);
    c.id = static_cast<int>(customers_.size());
    if (log_) log_->on(tick_, c.id, "spawn",
                       c.status.kind == InfectionKind::SeedInfective ? "infective" : "susceptible");
    customers_.push_back(std::move(c));
    plan_initial_leg(customers_.back(), ctx, tick_);
  }
}

void Engine::advance_phase() {
  AdvanceContext ctx{layout_,
                     planner_,
                     register_busy_,
                     config_.checkout_service_seconds,
                     config_.greedy_by_path,
                     log_.get()};
  for (Customer& c : customers_) {
    if (c.entry_tick == tick_) continue;  // spawned this tick; first step next tick
    advance_customer(c, ctx, tick_);
  }
}

void Engine::tick() {
  assert(tick_ < config_.duration_seconds);
  spawn_phase();
  advance_phase();
  accrue_exposure(customers_, layout_, mask_, config_.accrual, scratch_);
  for (Customer& c : customers_) {
    if (!c.in_store()) continue;
    if (check_infection(c, config_.exposure, tick_) && log_)
      log_->on(tick_, c.id, "infected", std::to_string(c.status.exposure_seconds));
  }
  ++tick_;
}

void Engine::run_to(int tick) {
  while (tick_ < tick && tick_ < config_.duration_seconds) this->tick();
}

RunResult Engine::result() const {
  RunResult r;
  r.config = config_;
  r.spawned = static_cast<int>(customers_.size());
  for (const Customer& c : customers_) {
    const bool exited = !c.in_store();
    if (exited) {
      ++r.total_customers;
      if (c.status.kind == InfectionKind::SeedInfective) ++r.starting_infective;
      if (c.status.kind == InfectionKind::NewlyInfected) ++r.newly_infected;
    } else {
      ++r.still_in_store;
      if (c.status.kind == InfectionKind::NewlyInfected) ++r.infected_in_store;
    }
    r.records.push_back({c.id, c.entry_tick, c.exit_tick, c.status.exposure_seconds, c.status.kind,
                         c.status.infected_at_tick, c.cells_traversed, c.waited_ticks,
                         c.phase == CustomerPhase::Exited ? config_.checkout_service_seconds : 0});
  }
  if (log_) r.events = log_->events;
  return r;
}

RunResult run(const StoreLayout& layout, const SimulationConfig& config) {
  Engine engine(layout, config);
  engine.run_to(config.duration_seconds);
  return engine.result();
}

}  // namespace rushsim
