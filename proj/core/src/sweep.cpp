#include "rushsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace rushsim {

std::size_t SweepSpec::run_count() const {
  return distances_feet.size() * thresholds_seconds.size() * seed_fractions.size() *
         spread_flags.size() * seeds.size();
}

void SweepSpec::validate() const {
  if (distances_feet.empty() || thresholds_seconds.empty() || seed_fractions.empty() ||
      spread_flags.empty() || seeds.empty())
    throw ConfigError("sweep spec lists must all be non-empty");
  base.validate();
  for (const double d : distances_feet)
    if (d <= 0) throw ConfigError("sweep distance must be > 0");
  for (const int t : thresholds_seconds)
    if (t < 1) throw ConfigError("sweep threshold must be >= 1");
  for (const double p : seed_fractions)
    if (p < 0 || p > 1) throw ConfigError("sweep seed fraction must be in [0,1]");
}

namespace {

struct Job {
  double distance;
  int threshold;
  double fraction;
  bool spread;
  std::uint64_t seed;
};

SweepRow run_job(const StoreLayout& layout, const SimulationConfig& base, const Job& job) {
  SimulationConfig config = base;
  config.exposure.max_distance_feet = job.distance;
  config.exposure.threshold_seconds = job.threshold;
  config.exposure.seed_fraction = job.fraction;
  config.exposure.newly_infected_spread = job.spread;
  config.seed = job.seed;
  config.log_events = false;
  const RunResult r = run(layout, config);
  return {job.distance,    job.threshold,       job.fraction,      job.spread,
          job.seed,        r.starting_infective, r.newly_infected, r.total_customers,
          r.spawned,       r.still_in_store};
}

}  // namespace

SweepResult run_sweep(const StoreLayout& layout, const SweepSpec& spec, int parallelism) {
  spec.validate();

  // Combo-major, seed-minor: rows land at fixed indices so the output is
  // identical for any worker count.
  std::vector<Job> jobs;
  jobs.reserve(spec.run_count());
  for (const double d : spec.distances_feet)
    for (const int t : spec.thresholds_seconds)
      for (const double p : spec.seed_fractions)
        for (const bool s : spec.spread_flags)
          for (const std::uint64_t seed : spec.seeds) jobs.push_back({d, t, p, s, seed});

  SweepResult result;
  result.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        result.rows[i] = run_job(layout, spec.base, jobs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
        return;
      }
    }
  };

  const int workers = std::max(1, parallelism);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t per_combo = spec.seeds.size();
  for (std::size_t at = 0; at < result.rows.size(); at += per_combo) {
    ComboAggregate agg{};
    const SweepRow& first = result.rows[at];
    agg.distance_ft = first.distance_ft;
    agg.threshold_s = first.threshold_s;
    agg.seed_fraction = first.seed_fraction;
    agg.spread = first.spread;
    agg.runs = static_cast<int>(per_combo);
    agg.min_newly_infected = first.newly_infected;
    agg.max_newly_infected = first.newly_infected;
    double sum = 0, sum_sq = 0, sum_start = 0, sum_total = 0;
    for (std::size_t i = at; i < at + per_combo; ++i) {
      const SweepRow& row = result.rows[i];
      sum += row.newly_infected;
      sum_sq += static_cast<double>(row.newly_infected) * row.newly_infected;
      sum_start += row.starting_infective;
      sum_total += row.total_customers;
      agg.min_newly_infected = std::min<double>(agg.min_newly_infected, row.newly_infected);
      agg.max_newly_infected = std::max<double>(agg.max_newly_infected, row.newly_infected);
    }
    const double n = static_cast<double>(per_combo);
    agg.mean_newly_infected = sum / n;
    agg.stddev_newly_infected =
        std::sqrt(std::max(0.0, sum_sq / n - agg.mean_newly_infected * agg.mean_newly_infected));
    agg.mean_starting_infective = sum_start / n;
    agg.mean_total_customers = sum_total / n;
    result.aggregates.push_back(agg);
  }
  return result;
}

SweepSpec paper_preset(std::string_view name) {
  SweepSpec spec;
  spec.distances_feet = {6, 8, 10, 12};
  spec.thresholds_seconds = {120, 300, 600, 900};
  spec.seeds.resize(10);
  std::iota(spec.seeds.begin(), spec.seeds.end(), 1);
  if (name == "table2_5") {
    spec.seed_fractions = {0.01};
    spec.spread_flags = {false};
  } else if (name == "table6_7") {
    spec.seed_fractions = {0.02};
    spec.spread_flags = {false};
  } else if (name == "table8_9") {
    spec.seed_fractions = {0.05};
    spec.spread_flags = {false};
  } else if (name == "table10_11") {
    spec.seed_fractions = {0.01};
    spec.spread_flags = {true};
  } else {
    throw ConfigError("unknown preset: " + std::string(name));
  }
  return spec;
}

std::vector<std::string> paper_preset_names() {
  return {"table2_5", "table6_7", "table8_9", "table10_11"};
}

}  // namespace rushsim
