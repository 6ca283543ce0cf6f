#ifndef RUSHSIM_AGENTS_HPP
#define RUSHSIM_AGENTS_HPP

#include <string>
#include <vector>

#include "rushsim/grid.hpp"
#include "rushsim/pathfind.hpp"
#include "rushsim/rng.hpp"

namespace rushsim {

enum class CustomerPhase : std::uint8_t { Shopping, ToCheckout, CheckingOut, ToExit, Exited };
enum class InfectionKind : std::uint8_t { Susceptible, SeedInfective, NewlyInfected };

struct InfectionStatus {
  InfectionKind kind = InfectionKind::Susceptible;
  int exposure_seconds = 0;       // cumulative, never decreases
  int infected_at_tick = -1;      // set when kind becomes NewlyInfected
  bool spreads_after_infection = false;  // run's spread flag, frozen at infection

  bool infective() const {
    return kind == InfectionKind::SeedInfective ||
           (kind == InfectionKind::NewlyInfected && spreads_after_infection);
  }
};

/// One shopper. Plain data owned by a single engine; advanced one tick at a
/// time along paths planned once per target.
struct Customer {
  int id = -1;
  CellCoord position;
  CustomerPhase phase = CustomerPhase::Shopping;
  std::vector<int> shopping_list;  // remaining product ids
  std::vector<CellCoord> path;     // current route, start..goal
  std::size_t path_pos = 0;        // index of the cell we currently stand on
  int lane_id = -1;                // claimed checkout lane, -1 until claimed
  int service_remaining = 0;
  InfectionStatus status;
  int entry_tick = 0;
  int exit_tick = -1;
  int cells_traversed = 0;
  int waited_ticks = 0;  // ticks spent standing at a queue cell

  bool in_store() const { return phase != CustomerPhase::Exited; }
  bool path_done() const { return path_pos + 1 >= path.size(); }
};

/// Draws, in order: list size uniform on {3..8}, that many products without
/// replacement, the entrance, and one uniform u with infective iff
/// u < p_infective (a single coupled draw, so raising p only adds
/// infectives).
Customer spawn_customer(SplitMix64& rng, const StoreLayout& layout, double p_infective,
                        int entry_tick);

/// Where the customer heads next given its phase. Shopping: remaining
/// product with minimum Manhattan distance (ties: lowest product id).
/// ToCheckout: queue cell of the nearest lane with a free register (ties:
/// lowest lane id; all busy: nearest lane regardless). ToExit: nearest exit.
CellCoord next_target(const Customer& customer, const StoreLayout& layout,
                      const std::vector<char>& register_busy);

struct EventSink {
  virtual ~EventSink() = default;
  virtual void on(int tick, int customer_id, const char* event, const std::string& detail) = 0;
};

struct AdvanceContext {
  const StoreLayout& layout;
  PathPlanner& planner;
  std::vector<char>& register_busy;  // per lane_id
  int checkout_service_seconds = 0;
  bool greedy_by_path = false;  // order products by true path length instead of Manhattan
  EventSink* events = nullptr;  // null = no logging
};

/// Moves the customer one cell (5 ft/s over 5' cells = one cell per 1 s
/// tick) and runs its state machine: pick up listed products on arrival,
/// claim a register from the queue cell, count down service, exit.
void advance_customer(Customer& customer, AdvanceContext& ctx, int tick);

/// Routes a freshly spawned customer to its first shopping target. Called
/// once at spawn, before the customer's first advance.
void plan_initial_leg(Customer& customer, AdvanceContext& ctx, int tick);

}  // namespace rushsim

#endif
