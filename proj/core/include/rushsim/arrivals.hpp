#ifndef RUSHSIM_ARRIVALS_HPP
#define RUSHSIM_ARRIVALS_HPP

#include <vector>

namespace rushsim {

struct ArrivalPhase {
  int start_s = 0;
  int end_s = 0;        // exclusive
  double rate_per_s = 0.0;
};

/// Piecewise-constant arrival rates. Phases must be contiguous,
/// non-overlapping and cover [0, duration).
struct ArrivalSchedule {
  std::vector<ArrivalPhase> phases;

  /// Black Friday rush: 2 customers / 1.5 s for 30 min, 1 / 1.5 s for
  /// 30 min, 1 / 3 s for an hour, 1 / 6 s for two hours. 6000 total.
  static ArrivalSchedule black_friday();

  double rate_at(int tick) const;
  int end_s() const { return phases.empty() ? 0 : phases.back().end_s; }
  bool covers(int duration_s) const;
};

struct ArrivalState {
  double accumulator = 0.0;  // fractional customer carried between ticks
};

/// Number of customers to spawn at this 1 s tick. Deterministic rate
/// accumulator: accumulate rate, emit the integer part, carry the fraction.
int arrivals_due(const ArrivalSchedule& schedule, int tick, ArrivalState& state);

}  // namespace rushsim

#endif
