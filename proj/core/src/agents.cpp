#include "rushsim/agents.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rushsim {

namespace {

int manhattan(CellCoord a, CellCoord b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

void plan_leg(Customer& c, AdvanceContext& ctx, CellCoord target) {
  c.path = ctx.planner.plan(c.position, target).cells;
  c.path_pos = 0;
}

int pick_product(const Customer& c, const StoreLayout& layout, AdvanceContext* ctx) {
  int best = -1;
  double best_dist = 0;
  for (const int id : c.shopping_list) {
    const CellCoord cell = layout.products[static_cast<std::size_t>(id)];
    const double d = (ctx && ctx->greedy_by_path)
                         ? ctx->planner.plan(c.position, cell).length_feet
                         : manhattan(c.position, cell);
    if (best == -1 || d < best_dist || (d == best_dist && id < best)) {
      best = id;
      best_dist = d;
    }
  }
  return best;
}

int pick_lane(const Customer& c, const StoreLayout& layout, const std::vector<char>& busy) {
  // Nearest lane with a free register, ties on lowest lane id; if every
  // register is busy, nearest lane overall.
  for (const bool require_free : {true, false}) {
    int best = -1, best_dist = 0;
    for (const CheckoutLane& lane : layout.checkouts) {
      if (require_free && busy[static_cast<std::size_t>(lane.lane_id)]) continue;
      const int d = manhattan(c.position, lane.queue_cell);
      if (best == -1 || d < best_dist || (d == best_dist && lane.lane_id < best)) {
        best = lane.lane_id;
        best_dist = d;
      }
    }
    if (best != -1) return best;
  }
  return 0;  // unreachable for validated layouts
}

CellCoord pick_exit(const Customer& c, const StoreLayout& layout) {
  CellCoord best = layout.exits.front();
  int best_dist = manhattan(c.position, best);
  for (const CellCoord e : layout.exits) {
    const int d = manhattan(c.position, e);
    if (d < best_dist) {
      best = e;
      best_dist = d;
    }
  }
  return best;
}

void emit(AdvanceContext& ctx, int tick, const Customer& c, const char* event,
          const std::string& detail = {}) {
  if (ctx.events) ctx.events->on(tick, c.id, event, detail);
}

void start_checkout_leg(Customer& c, AdvanceContext& ctx, int tick) {
  c.phase = CustomerPhase::ToCheckout;
  c.lane_id = pick_lane(c, ctx.layout, ctx.register_busy);
  plan_leg(c, ctx, ctx.layout.checkouts[static_cast<std::size_t>(c.lane_id)].queue_cell);
  emit(ctx, tick, c, "to_checkout", std::to_string(c.lane_id));
}

void start_exit_leg(Customer& c, AdvanceContext& ctx, int tick) {
  c.phase = CustomerPhase::ToExit;
  plan_leg(c, ctx, pick_exit(c, ctx.layout));
  emit(ctx, tick, c, "to_exit");
}

void begin_service(Customer& c, AdvanceContext& ctx, int tick) {
  if (ctx.checkout_service_seconds > 0) {
    c.phase = CustomerPhase::CheckingOut;
    c.service_remaining = ctx.checkout_service_seconds;
    emit(ctx, tick, c, "checkout_start", std::to_string(c.lane_id));
  } else {
    ctx.register_busy[static_cast<std::size_t>(c.lane_id)] = 0;
    start_exit_leg(c, ctx, tick);
  }
}

void claim_register(Customer& c, AdvanceContext& ctx) {
  ctx.register_busy[static_cast<std::size_t>(c.lane_id)] = 1;
  plan_leg(c, ctx, ctx.layout.checkouts[static_cast<std::size_t>(c.lane_id)].register_cell);
}

void handle_arrival(Customer& c, AdvanceContext& ctx, int tick) {
  const CheckoutLane* lane =
      c.lane_id >= 0 ? &ctx.layout.checkouts[static_cast<std::size_t>(c.lane_id)] : nullptr;
  switch (c.phase) {
    case CustomerPhase::Shopping:
      if (c.shopping_list.empty()) {
        start_checkout_leg(c, ctx, tick);
      } else {
        plan_leg(c, ctx,
                 ctx.layout.products[static_cast<std::size_t>(pick_product(c, ctx.layout, &ctx))]);
      }
      break;
    case CustomerPhase::ToCheckout:
      if (c.position == lane->register_cell) {
        begin_service(c, ctx, tick);
      } else if (!ctx.register_busy[static_cast<std::size_t>(c.lane_id)]) {
        claim_register(c, ctx);  // at the queue cell, register free: step in
      }
      // otherwise stand at the queue cell until the register frees up
      break;
    case CustomerPhase::ToExit:
      c.phase = CustomerPhase::Exited;
      c.exit_tick = tick;
      emit(ctx, tick, c, "exit");
      break;
    default:
      break;
  }
}

}  // namespace

Customer spawn_customer(SplitMix64& rng, const StoreLayout& layout, double p_infective,
                        int entry_tick) {
  Customer c;
  c.entry_tick = entry_tick;
  const int list_size = rng.range(3, 8);

  std::vector<int> ids(layout.products.size());
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < list_size; ++i) {
    const std::size_t j = i + rng.below(ids.size() - i);
    std::swap(ids[static_cast<std::size_t>(i)], ids[j]);
  }
  c.shopping_list.assign(ids.begin(), ids.begin() + list_size);

  c.position = layout.entrances[rng.below(layout.entrances.size())];
  // One coupled uniform draw: raising p_infective can only add infectives.
  c.status.kind = rng.uniform() < p_infective ? InfectionKind::SeedInfective
                                              : InfectionKind::Susceptible;
  c.path = {c.position};
  c.path_pos = 0;
  return c;
}

void plan_initial_leg(Customer& c, AdvanceContext& ctx, int tick) {
  if (c.shopping_list.empty()) {
    start_checkout_leg(c, ctx, tick);
    return;
  }
  plan_leg(c, ctx,
           ctx.layout.products[static_cast<std::size_t>(pick_product(c, ctx.layout, &ctx))]);
}

CellCoord next_target(const Customer& customer, const StoreLayout& layout,
                      const std::vector<char>& register_busy) {
  switch (customer.phase) {
    case CustomerPhase::Shopping:
      return layout.products[static_cast<std::size_t>(pick_product(customer, layout, nullptr))];
    case CustomerPhase::ToCheckout:
      return layout
          .checkouts[static_cast<std::size_t>(pick_lane(customer, layout, register_busy))]
          .queue_cell;
    default:
      return pick_exit(customer, layout);
  }
}

void advance_customer(Customer& c, AdvanceContext& ctx, int tick) {
  switch (c.phase) {
    case CustomerPhase::Exited:
      return;
    case CustomerPhase::CheckingOut:
      if (--c.service_remaining <= 0) {
        ctx.register_busy[static_cast<std::size_t>(c.lane_id)] = 0;
        emit(ctx, tick, c, "checkout_end", std::to_string(c.lane_id));
        start_exit_leg(c, ctx, tick);
      }
      return;
    default:
      break;
  }

  if (c.path_done()) {
    // Only reachable while standing at a queue cell for a busy register;
    // the claim tick itself still counts as waiting (no movement).
    ++c.waited_ticks;
    if (c.phase == CustomerPhase::ToCheckout &&
        !ctx.register_busy[static_cast<std::size_t>(c.lane_id)]) {
      claim_register(c, ctx);
    }
    return;
  }

  ++c.path_pos;
  c.position = c.path[c.path_pos];
  ++c.cells_traversed;

  // Pick up any listed product we walk over, targeted or not.
  const CellKind& kind = ctx.layout.at(c.position);
  if (kind.type == CellType::Product) {
    const auto it = std::find(c.shopping_list.begin(), c.shopping_list.end(), kind.id);
    if (it != c.shopping_list.end()) {
      c.shopping_list.erase(it);
      emit(ctx, tick, c, "pickup", std::to_string(kind.id));
    }
  }

  if (c.path_done()) handle_arrival(c, ctx, tick);
}

}  // namespace rushsim
