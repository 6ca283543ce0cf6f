#include "rushsim/arrivals.hpp"

#include <cmath>

namespace rushsim {

ArrivalSchedule ArrivalSchedule::black_friday() {
  ArrivalSchedule schedule;
  schedule.phases = {
      {0, 1800, 2.0 / 1.5},     // 2400 expected
      {1800, 3600, 1.0 / 1.5},  // 1200
      {3600, 7200, 1.0 / 3.0},  // 1200
      {7200, 14400, 1.0 / 6.0}, // 1200
  };
  return schedule;
}

double ArrivalSchedule::rate_at(int tick) const {
  for (const ArrivalPhase& p : phases)
    if (tick >= p.start_s && tick < p.end_s) return p.rate_per_s;
  return 0.0;
}

bool ArrivalSchedule::covers(int duration_s) const {
  if (phases.empty()) return false;
  int expect = 0;
  for (const ArrivalPhase& p : phases) {
    if (p.start_s != expect || p.end_s <= p.start_s || p.rate_per_s < 0) return false;
    expect = p.end_s;
  }
  return expect >= duration_s;
}

int arrivals_due(const ArrivalSchedule& schedule, int tick, ArrivalState& state) {
  // Absorbs accumulated floating-point error (~1e-13 over a full schedule)
  // so rates like 4/3 hit their phase totals exactly.
  constexpr double kEps = 1e-9;
  state.accumulator += schedule.rate_at(tick);
  const int due = static_cast<int>(std::floor(state.accumulator + kEps));
  state.accumulator -= due;
  return due;
}

}  // namespace rushsim
