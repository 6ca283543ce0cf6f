#include "rushsim/exposure.hpp"

namespace rushsim {

void accrue_exposure(std::span<Customer> customers, const StoreLayout& layout,
                     const NeighborhoodMask& mask, AccrualRule rule, ExposureScratch& scratch) {
  if (scratch.count.size() != layout.cells.size()) {
    scratch.count.assign(layout.cells.size(), 0);
  }

  // Stamp the vulnerable cells of every currently infective customer.
  for (const Customer& c : customers) {
    if (!c.in_store() || !c.status.infective()) continue;
    for (const auto& [dx, dy] : mask.offsets) {
      const CellCoord cell{c.position.x + dx, c.position.y + dy};
      if (!layout.in_bounds(cell)) continue;
      const auto idx = static_cast<std::size_t>(layout.cell_index(cell));
      if (scratch.count[idx] == 0) scratch.touched.push_back(static_cast<int>(idx));
      ++scratch.count[idx];
    }
  }

  for (Customer& c : customers) {
    if (!c.in_store() || c.status.kind != InfectionKind::Susceptible) continue;
    const int n = scratch.count[static_cast<std::size_t>(layout.cell_index(c.position))];
    if (n == 0) continue;
    c.status.exposure_seconds += rule == AccrualRule::PerTick ? 1 : n;
  }

  for (const int idx : scratch.touched) scratch.count[static_cast<std::size_t>(idx)] = 0;
  scratch.touched.clear();
}

bool check_infection(Customer& customer, const ExposureParams& params, int tick) {
  if (customer.status.kind != InfectionKind::Susceptible) return false;
  if (customer.status.exposure_seconds < params.threshold_seconds) return false;
  customer.status.kind = InfectionKind::NewlyInfected;
  customer.status.infected_at_tick = tick;
  customer.status.spreads_after_infection = params.newly_infected_spread;
  return true;
}

}  // namespace rushsim
