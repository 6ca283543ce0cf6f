// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit code
// is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "rushsim/engine.hpp"
#include "rushsim/grid.hpp"
#include "rushsim/pathfind.hpp"
#include "rushsim/report.hpp"
#include "rushsim/rng.hpp"
#include "rushsim/sweep.hpp"

using namespace rushsim;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const StoreLayout& layout() {
  static const StoreLayout l = generate_default_layout();
  return l;
}

int jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Rows for the four published grids, keyed by preset name. Computed once,
// shared by the statistical criteria.
using RowKey = std::tuple<double, int, std::uint64_t>;  // distance, threshold, seed
struct PresetRows {
  std::vector<SweepRow> rows;
  std::map<RowKey, SweepRow> by_key;
};

const std::map<std::string, PresetRows>& presets() {
  static const std::map<std::string, PresetRows> data = [] {
    std::map<std::string, PresetRows> out;
    for (const std::string& name : paper_preset_names()) {
      const SweepSpec spec = paper_preset(name);
      PresetRows p;
      p.rows = run_sweep(layout(), spec, jobs()).rows;
      for (const SweepRow& row : p.rows) p.by_key[{row.distance_ft, row.threshold_s, row.seed}] = row;
      std::fprintf(stderr, "  [setup] preset %s done (%zu rows)\n", name.c_str(), p.rows.size());
      out[name] = std::move(p);
    }
    return out;
  }();
  return data;
}

double mean_newly(const PresetRows& p, double d, int t) {
  double sum = 0;
  int n = 0;
  for (const SweepRow& row : p.rows)
    if (row.distance_ft == d && row.threshold_s == t) {
      sum += row.newly_infected;
      ++n;
    }
  return sum / n;
}

void criterion_1() {
  const std::vector<std::pair<double, std::size_t>> expected = {
      {6, 5}, {8, 9}, {10, 13}, {12, 21}};
  bool ok = true;
  for (const auto& [d, n] : expected)
    ok = ok && vulnerable_neighborhood(d, 5.0).offsets.size() == n;
  report(1, ok, "vulnerable neighborhoods hold 5/9/13/21 cells at 6/8/10/12 ft");
}

void criterion_2() {
  SplitMix64 rng(20260824);
  bool ok = true;
  int solvable = 0;
  while (solvable < 200 && ok) {
    StoreLayout grid = StoreLayout::open(20, 20);
    for (CellKind& kind : grid.cells)
      if (rng.uniform() < 0.2) kind.type = CellType::Blocked;
    const CellCoord start{rng.range(0, 19), rng.range(0, 19)};
    const CellCoord goal{rng.range(0, 19), rng.range(0, 19)};
    if (!grid.traversable(start) || !grid.traversable(goal)) continue;
    const auto oracle = bfs_shortest_length(grid, start, goal);
    if (!oracle) continue;
    ++solvable;

    const Path standard = plan_path(grid, start, goal, PathfindMode::Standard);
    ok = ok && standard.steps() == *oracle;

    const Path literal = plan_path(grid, start, goal, PathfindMode::PaperLiteral);
    ok = ok && literal.cells.front() == start && literal.cells.back() == goal;
    for (std::size_t i = 0; ok && i < literal.cells.size(); ++i) {
      ok = grid.traversable(literal.cells[i]);
      if (i > 0)
        ok = ok && std::abs(literal.cells[i].x - literal.cells[i - 1].x) +
                           std::abs(literal.cells[i].y - literal.cells[i - 1].y) ==
                       1;
    }
  }
  report(2, ok, "standard A* matches BFS on 200 random grids, literal mode stays valid");
}

void criterion_3() {
  const ArrivalSchedule schedule = ArrivalSchedule::black_friday();
  ArrivalState state;
  int totals[4] = {0, 0, 0, 0};
  for (int tick = 0; tick < 14400; ++tick)
    totals[tick < 1800 ? 0 : tick < 3600 ? 1 : tick < 7200 ? 2 : 3] +=
        arrivals_due(schedule, tick, state);
  const bool ok = totals[0] == 2400 && totals[1] == 1200 && totals[2] == 1200 && totals[3] == 1200;
  report(3, ok, "arrival phases produce exactly 2400/1200/1200/1200 customers");
}

void criterion_4() {
  bool ok = true;
  const PresetRows& base = presets().at("table2_5");
  int seeds = 0;
  for (const SweepRow& row : base.rows)
    if (row.distance_ft == 6 && row.threshold_s == 900) {
      ok = ok && row.newly_infected == 0;
      ++seeds;
    }
  ok = ok && seeds == 10;
  report(4, ok, "6 ft / 900 s / 1% produces zero new infections in all 10 seeds");
}

void criterion_5() {
  const PresetRows& base = presets().at("table2_5");
  double ratio_sum = 0;
  int n = 0;
  for (const SweepRow& row : base.rows)
    if (row.distance_ft == 6 && row.threshold_s == 120) {
      ratio_sum += static_cast<double>(row.newly_infected) / row.total_customers;
      ++n;
    }
  const double mean = ratio_sum / n;
  const bool ok = n == 10 && mean >= 0.0005 && mean <= 0.02;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", mean);
  report(5, ok, std::string("6 ft / 120 s mean infection ratio ") + buf + " within [0.0005, 0.02]");
}

void criterion_6() {
  const auto& all = presets();
  const PresetRows& p1 = all.at("table2_5");
  const PresetRows& p2 = all.at("table6_7");
  const PresetRows& p5 = all.at("table8_9");
  const PresetRows& sp = all.at("table10_11");
  const std::vector<double> ds = {6, 8, 10, 12};
  const std::vector<int> ts = {120, 300, 600, 900};

  bool ok = true;
  for (const PresetRows* p : {&p1, &p2, &p5, &sp})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      for (const int t : ts)
        for (std::size_t i = 1; i < ds.size(); ++i)
          ok = ok && p->by_key.at({ds[i - 1], t, seed}).newly_infected <=
                         p->by_key.at({ds[i], t, seed}).newly_infected;
      for (const double d : ds)
        for (std::size_t i = 1; i < ts.size(); ++i)
          ok = ok && p->by_key.at({d, ts[i], seed}).newly_infected <=
                         p->by_key.at({d, ts[i - 1], seed}).newly_infected;
    }
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (const double d : ds)
      for (const int t : ts) {
        const RowKey key{d, t, seed};
        ok = ok && p1.by_key.at(key).newly_infected <= p2.by_key.at(key).newly_infected;
        ok = ok && p2.by_key.at(key).newly_infected <= p5.by_key.at(key).newly_infected;
        ok = ok && p1.by_key.at(key).newly_infected <= sp.by_key.at(key).newly_infected;
      }
  report(6, ok, "per-seed monotonicity in distance, threshold, seed fraction and spread");
}

void criterion_7() {
  const auto& all = presets();
  const double m1 = mean_newly(all.at("table2_5"), 12, 120);
  const double m2 = mean_newly(all.at("table6_7"), 12, 120);
  const double m5 = mean_newly(all.at("table8_9"), 12, 120);
  const double msp = mean_newly(all.at("table10_11"), 12, 120);
  const bool ok = m1 > 0 && m2 >= 1.5 * m1 && m5 >= 1.5 * m2 && msp >= 2.0 * m1;
  char buf[96];
  std::snprintf(buf, sizeof buf, "means %.1f/%.1f/%.1f, spread %.1f", m1, m2, m5, msp);
  report(7, ok,
         std::string("12 ft / 120 s scales >=1.5x per seed-fraction step, spread >=2x (") + buf +
             ")");
}

void criterion_8() {
  bool ok = true;
  for (const auto& [name, p] : presets())
    for (const SweepRow& row : p.rows) {
      ok = ok && row.spawned == row.total_customers + row.still_in_store;
      ok = ok && row.spawned == 6000;
      ok = ok && row.total_customers >= 5800 && row.total_customers <= 6000;
    }
  SimulationConfig config;
  const RunResult r = run(layout(), config);
  for (const CustomerRecord& rec : r.records) {
    const int in_store = (rec.exit_tick < 0 ? config.duration_seconds : rec.exit_tick) -
                         rec.entry_tick;
    ok = ok && rec.exposure_seconds <= in_store;
  }
  report(8, ok, "conservation holds, exposure bounded by time in store, 5800-6000 exits");
}

void criterion_9() {
  SimulationConfig config;
  config.duration_seconds = 1800;
  config.seed = 4242;
  const bool byte_identical = results_csv(run(layout(), config)) ==
                              results_csv(run(layout(), config));

  SweepSpec spec;
  spec.distances_feet = {6, 12};
  spec.thresholds_seconds = {120, 900};
  spec.seed_fractions = {0.05};
  spec.spread_flags = {false};
  spec.seeds = {1, 2, 3};
  spec.base.duration_seconds = 1800;
  const bool jobs_independent = results_csv(run_sweep(layout(), spec, 1)) ==
                                results_csv(run_sweep(layout(), spec, 4));
  report(9, byte_identical && jobs_independent,
         "byte-identical reruns, sweep output independent of the job count");
}

void criterion_10() {
  long long infective = 0, exited = 0;
  const PresetRows& base = presets().at("table2_5");
  for (const SweepRow& row : base.rows)
    if (row.distance_ft == 6 && row.threshold_s == 900) {
      infective += row.starting_infective;
      exited += row.total_customers;
    }
  for (std::uint64_t seed = 11; seed <= 30; ++seed) {
    SimulationConfig config;
    config.seed = seed;
    const RunResult r = run(layout(), config);
    infective += r.starting_infective;
    exited += r.total_customers;
  }
  const double expected = 0.01 * static_cast<double>(exited);
  const double sigma = std::sqrt(static_cast<double>(exited) * 0.01 * 0.99);
  const double deviation = std::abs(static_cast<double>(infective) - expected);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%lld infective vs %.0f expected, %.1f sigma", infective,
                expected, deviation / sigma);
  report(10, deviation <= 3 * sigma,
         std::string("30-seed seeding stays within 3 sigma of Binomial(exited, 1%) (") + buf + ")");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  return failures;
}
