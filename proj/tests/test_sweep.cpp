#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rushsim/engine.hpp"
#include "rushsim/sweep.hpp"

using namespace rushsim;

namespace {

const StoreLayout& default_layout() {
  static const StoreLayout layout = generate_default_layout();
  return layout;
}

SweepSpec small_spec() {
  SweepSpec spec;
  spec.distances_feet = {6, 12};
  spec.thresholds_seconds = {60, 300};
  spec.seed_fractions = {0.01, 0.05};
  spec.spread_flags = {false, true};
  spec.seeds = {1, 2};
  spec.base.duration_seconds = 600;
  return spec;
}

}  // namespace

TEST_CASE("spec validation and counting") {
  SweepSpec spec = small_spec();
  CHECK(spec.run_count() == 32);
  CHECK_NOTHROW(spec.validate());
  spec.seeds.clear();
  CHECK(spec.run_count() == 0);
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec = small_spec();
  spec.distances_feet = {-1};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("rows land combo-major, seed-minor, and match single runs") {
  const SweepSpec spec = small_spec();
  const SweepResult result = run_sweep(default_layout(), spec, 1);
  REQUIRE(result.rows.size() == 32);
  REQUIRE(result.aggregates.size() == 16);

  std::size_t i = 0;
  for (const double d : spec.distances_feet)
    for (const int t : spec.thresholds_seconds)
      for (const double p : spec.seed_fractions)
        for (const bool s : spec.spread_flags)
          for (const std::uint64_t seed : spec.seeds) {
            const SweepRow& row = result.rows[i++];
            CHECK(row.distance_ft == d);
            CHECK(row.threshold_s == t);
            CHECK(row.seed_fraction == p);
            CHECK(row.spread == s);
            CHECK(row.seed == seed);
          }

  // Spot-check two rows against a direct engine run.
  for (const std::size_t pick : {std::size_t{0}, std::size_t{27}}) {
    const SweepRow& row = result.rows[pick];
    SimulationConfig config = spec.base;
    config.seed = row.seed;
    config.exposure.max_distance_feet = row.distance_ft;
    config.exposure.threshold_seconds = row.threshold_s;
    config.exposure.seed_fraction = row.seed_fraction;
    config.exposure.newly_infected_spread = row.spread;
    const RunResult direct = run(default_layout(), config);
    CHECK(row.starting_infective == direct.starting_infective);
    CHECK(row.newly_infected == direct.newly_infected);
    CHECK(row.total_customers == direct.total_customers);
    CHECK(row.spawned == direct.spawned);
    CHECK(row.still_in_store == direct.still_in_store);
  }
}

TEST_CASE("aggregates are the row statistics") {
  const SweepResult result = run_sweep(default_layout(), small_spec(), 1);
  for (std::size_t combo = 0; combo < result.aggregates.size(); ++combo) {
    const ComboAggregate& agg = result.aggregates[combo];
    CHECK(agg.runs == 2);
    double sum = 0, min = 1e9, max = -1;
    double start_sum = 0, total_sum = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const SweepRow& row = result.rows[combo * 2 + k];
      CHECK(row.distance_ft == agg.distance_ft);
      CHECK(row.threshold_s == agg.threshold_s);
      sum += row.newly_infected;
      min = std::min<double>(min, row.newly_infected);
      max = std::max<double>(max, row.newly_infected);
      start_sum += row.starting_infective;
      total_sum += row.total_customers;
    }
    const double mean = sum / 2;
    CHECK(agg.mean_newly_infected == doctest::Approx(mean));
    CHECK(agg.min_newly_infected == doctest::Approx(min));
    CHECK(agg.max_newly_infected == doctest::Approx(max));
    CHECK(agg.mean_starting_infective == doctest::Approx(start_sum / 2));
    CHECK(agg.mean_total_customers == doctest::Approx(total_sum / 2));
    double var = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const double d = result.rows[combo * 2 + k].newly_infected - mean;
      var += d * d;
    }
    CHECK(agg.stddev_newly_infected == doctest::Approx(std::sqrt(var / 2)));
  }
}

TEST_CASE("parallelism does not change the output") {
  const SweepSpec spec = small_spec();
  const SweepResult serial = run_sweep(default_layout(), spec, 1);
  const SweepResult threaded = run_sweep(default_layout(), spec, 4);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].seed == threaded.rows[i].seed);
    CHECK(serial.rows[i].newly_infected == threaded.rows[i].newly_infected);
    CHECK(serial.rows[i].starting_infective == threaded.rows[i].starting_infective);
    CHECK(serial.rows[i].total_customers == threaded.rows[i].total_customers);
  }
}

TEST_CASE("same-seed monotonicity on a small grid") {
  SweepSpec spec;
  spec.distances_feet = {6, 12};
  spec.thresholds_seconds = {60, 600};
  spec.seed_fractions = {0.01, 0.05};
  spec.spread_flags = {false};
  spec.seeds = {1, 2, 3};
  spec.base.duration_seconds = 1800;
  const SweepResult result = run_sweep(default_layout(), spec, 1);

  auto newly = [&](double d, int t, double p, std::uint64_t seed) {
    for (const SweepRow& row : result.rows)
      if (row.distance_ft == d && row.threshold_s == t && row.seed_fraction == p &&
          row.seed == seed)
        return row.newly_infected;
    FAIL("row not found");
    return -1;
  };

  for (const std::uint64_t seed : spec.seeds) {
    for (const int t : spec.thresholds_seconds)
      for (const double p : spec.seed_fractions)
        CHECK(newly(6, t, p, seed) <= newly(12, t, p, seed));
    for (const double d : spec.distances_feet)
      for (const double p : spec.seed_fractions)
        CHECK(newly(d, 600, p, seed) <= newly(d, 60, p, seed));
    for (const double d : spec.distances_feet)
      for (const int t : spec.thresholds_seconds)
        CHECK(newly(d, t, 0.01, seed) <= newly(d, t, 0.05, seed));
  }
}

TEST_CASE("paper presets") {
  const std::vector<std::string> names = paper_preset_names();
  REQUIRE(names.size() == 4);
  for (const std::string& name : names) {
    const SweepSpec spec = paper_preset(name);
    CHECK(spec.distances_feet == std::vector<double>{6, 8, 10, 12});
    CHECK(spec.thresholds_seconds == std::vector<int>{120, 300, 600, 900});
    CHECK(spec.seed_fractions.size() == 1);
    CHECK(spec.spread_flags.size() == 1);
    CHECK(spec.seeds.size() == 10);
    CHECK(spec.run_count() == 160);
    CHECK(spec.base.duration_seconds == 14400);
  }
  CHECK(paper_preset("table2_5").seed_fractions[0] == doctest::Approx(0.01));
  CHECK(paper_preset("table6_7").seed_fractions[0] == doctest::Approx(0.02));
  CHECK(paper_preset("table8_9").seed_fractions[0] == doctest::Approx(0.05));
  CHECK(paper_preset("table10_11").seed_fractions[0] == doctest::Approx(0.01));
  CHECK(paper_preset("table10_11").spread_flags[0]);
  CHECK(!paper_preset("table2_5").spread_flags[0]);
  CHECK_THROWS_AS(paper_preset("nope"), ConfigError);
}
