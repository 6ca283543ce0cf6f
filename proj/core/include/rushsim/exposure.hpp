#ifndef RUSHSIM_EXPOSURE_HPP
#define RUSHSIM_EXPOSURE_HPP

#include <span>
#include <vector>

#include "rushsim/agents.hpp"
#include "rushsim/grid.hpp"

namespace rushsim {

/// PerTick: standing near any number of infectives adds 1 s per tick (a
/// close-contact clock). PerInfective: 1 s per nearby infective per tick.
enum class AccrualRule : std::uint8_t { PerTick, PerInfective };

/// The four experimental knobs.
struct ExposureParams {
  double max_distance_feet = 6.0;   // paper grid: 6/8/10/12
  int threshold_seconds = 900;      // paper grid: 120/300/600/900
  double seed_fraction = 0.01;      // paper grid: 0.01/0.02/0.05
  bool newly_infected_spread = false;

  bool valid() const {
    return max_distance_feet > 0 && threshold_seconds >= 1 && seed_fraction >= 0 &&
           seed_fraction <= 1;
  }
};

/// Scratch space reused across ticks so accrual allocates nothing steady
/// state.
struct ExposureScratch {
  std::vector<int> count;     // per cell index, infectives covering it
  std::vector<int> touched;   // cell indices written this tick
};

/// One tick of accrual: every in-store susceptible within the mask of at
/// least one in-store infective gains exposure per the accrual rule.
/// Separate encounters compound onto the same clock.
void accrue_exposure(std::span<Customer> customers, const StoreLayout& layout,
                     const NeighborhoodMask& mask, AccrualRule rule, ExposureScratch& scratch);

/// Threshold rule, inclusive: exposure >= threshold flips a susceptible to
/// NewlyInfected. The new status feeds accrual only from the next tick
/// (accrual for the current tick has already run). Returns true on flip.
bool check_infection(Customer& customer, const ExposureParams& params, int tick);

}  // namespace rushsim

#endif
