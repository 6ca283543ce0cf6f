#include <benchmark/benchmark.h>

#include <optional>

#include "rushsim/engine.hpp"
#include "rushsim/grid.hpp"
#include "rushsim/pathfind.hpp"
#include "rushsim/rng.hpp"

using namespace rushsim;

namespace {

const StoreLayout& layout() {
  static const StoreLayout l = generate_default_layout();
  return l;
}

void BM_PlanPath(benchmark::State& state) {
  const PathfindMode mode = static_cast<PathfindMode>(state.range(0));
  SplitMix64 rng(1);
  std::vector<std::pair<CellCoord, CellCoord>> cases;
  while (cases.size() < 64) {
    const CellCoord a{rng.range(0, 79), rng.range(0, 59)};
    const CellCoord b{rng.range(0, 79), rng.range(0, 59)};
    if (layout().traversable(a) && layout().traversable(b)) cases.emplace_back(a, b);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(plan_path(layout(), a, b, mode));
  }
}
BENCHMARK(BM_PlanPath)
    ->Arg(static_cast<int>(PathfindMode::Standard))
    ->Arg(static_cast<int>(PathfindMode::PaperLiteral));

void BM_PlannerCacheHit(benchmark::State& state) {
  PathPlanner planner(layout(), PathfindMode::Standard);
  const CellCoord a = layout().entrances[0];
  const CellCoord b = layout().products[0];
  planner.plan(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(planner.plan(a, b));
}
BENCHMARK(BM_PlannerCacheHit);

void BM_EngineTick(benchmark::State& state) {
  SimulationConfig config;
  std::optional<Engine> engine;
  engine.emplace(layout(), config);
  engine->run_to(900);  // fill the store before measuring
  for (auto _ : state) {
    if (engine->current_tick() == config.duration_seconds) {
      state.PauseTiming();
      engine.emplace(layout(), config);
      engine->run_to(900);
      state.ResumeTiming();
    }
    engine->tick();
  }
}
BENCHMARK(BM_EngineTick);

void BM_FullRun(benchmark::State& state) {
  SimulationConfig config;
  config.duration_seconds = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(run(layout(), config));
  }
}
BENCHMARK(BM_FullRun)->Arg(1800)->Arg(14400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
