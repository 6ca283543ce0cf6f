// rushsim CLI: single runs, parameter sweeps, layout tooling.
//
// Exit codes: 0 success, 1 usage error, 2 validation/config error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rushsim/config.hpp"
#include "rushsim/engine.hpp"
#include "rushsim/grid.hpp"
#include "rushsim/report.hpp"
#include "rushsim/sweep.hpp"

namespace {

using namespace rushsim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string default_out(const std::string& name) {
  if (const char* dir = std::getenv("RUSHSIM_OUT_DIR"))
    return (std::filesystem::path(dir) / name).string();
  return name;
}

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> distance_ft;
  std::optional<int> threshold_s;
  std::optional<double> seed_fraction;
  std::optional<bool> spread;
  std::optional<std::string> pathfind_mode;
  std::optional<int> checkout_service_s;
  std::optional<std::string> accrual;
  bool log_events = false;

  void apply(SimulationConfig& sim) const {
    if (seed) sim.seed = *seed;
    if (distance_ft) sim.exposure.max_distance_feet = *distance_ft;
    if (threshold_s) sim.exposure.threshold_seconds = *threshold_s;
    if (seed_fraction) sim.exposure.seed_fraction = *seed_fraction;
    if (spread) sim.exposure.newly_infected_spread = *spread;
    if (pathfind_mode) sim.pathfind_mode = pathfind_mode_from(*pathfind_mode);
    if (checkout_service_s) sim.checkout_service_seconds = *checkout_service_s;
    if (accrual) sim.accrual = accrual_rule_from(*accrual);
    if (log_events) sim.log_events = true;
  }
};

void add_override_flags(CLI::App& cmd, Overrides& ov) {
  cmd.add_option("--seed", ov.seed, "RNG seed");
  cmd.add_option("--distance-ft", ov.distance_ft, "max exposure distance in feet");
  cmd.add_option("--threshold-s", ov.threshold_s, "exposure threshold in seconds");
  cmd.add_option("--seed-fraction", ov.seed_fraction, "fraction of customers entering infective");
  cmd.add_option("--spread", ov.spread, "newly infected customers spread (0/1)");
  cmd.add_option("--pathfind-mode", ov.pathfind_mode, "standard | paper_literal");
  cmd.add_option("--checkout-service-s", ov.checkout_service_s, "checkout service seconds");
  cmd.add_option("--accrual", ov.accrual, "per_tick | per_infective");
  cmd.add_flag("--log-events", ov.log_events, "write an event log next to the results");
}

StoreLayout load_layout(const std::string& cli_path, const std::string& config_path,
                        std::string& source) {
  const std::string& path = !cli_path.empty() ? cli_path : config_path;
  if (path.empty()) {
    source.clear();
    return generate_default_layout();
  }
  source = path;
  return parse_layout(read_file(path));
}

int cmd_simulate(const std::string& config_path, const std::string& layout_path,
                 const Overrides& ov, const std::string& out_path) {
  FileConfig fc;
  if (!config_path.empty()) fc = parse_config(read_file(config_path));
  ov.apply(fc.sim);

  std::string source;
  const StoreLayout layout = load_layout(layout_path, fc.layout_path, source);
  const RunResult result = run(layout, fc.sim);

  const std::string out = out_path.empty() ? default_out("results.csv") : out_path;
  write_file(out, results_csv(result));
  write_file(out + ".manifest", run_manifest(fc.sim, layout_checksum(layout), source));
  if (fc.sim.log_events) write_file(out + ".events.csv", events_csv(result));

  std::cout << "seed " << fc.sim.seed << ": spawned " << result.spawned << ", exited "
            << result.total_customers << ", starting infective " << result.starting_infective
            << ", newly infected " << result.newly_infected << "\n"
            << "results written to " << out << "\n";
  return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& preset,
              const std::string& layout_path, std::optional<int> seeds, int jobs,
              const Overrides& ov, const std::string& out_path) {
  FileSweepSpec fs;
  if (!preset.empty()) {
    fs.spec = paper_preset(preset);
  } else if (!spec_path.empty()) {
    fs = parse_sweep_spec(read_file(spec_path));
  } else {
    throw ConfigError("sweep needs --preset or --config");
  }
  ov.apply(fs.spec.base);
  if (seeds) {
    fs.spec.seeds.clear();
    for (int i = 1; i <= *seeds; ++i) fs.spec.seeds.push_back(static_cast<std::uint64_t>(i));
  }

  std::string source;
  const StoreLayout layout = load_layout(layout_path, fs.layout_path, source);
  const SweepResult result = run_sweep(layout, fs.spec, jobs);

  const std::string out = out_path.empty() ? default_out("sweep.csv") : out_path;
  write_file(out, results_csv(result));
  write_file(out + ".manifest", run_manifest(fs.spec.base, layout_checksum(layout), source));

  std::cout << result.rows.size() << " runs written to " << out << "\n";
  for (const ComboAggregate& agg : result.aggregates)
    std::cout << "D=" << agg.distance_ft << "ft T=" << agg.threshold_s << "s p="
              << agg.seed_fraction << " spread=" << agg.spread << ": newly infected mean "
              << agg.mean_newly_infected << " (min " << agg.min_newly_infected << ", max "
              << agg.max_newly_infected << ")\n";
  return 0;
}

int cmd_validate(const std::string& layout_path) {
  const StoreLayout layout =
      layout_path.empty() ? generate_default_layout() : parse_layout(read_file(layout_path));
  const ValidationReport report = validate_layout(layout);
  if (report.ok()) {
    std::cout << "ok: " << layout.width_cells << "x" << layout.height_cells << " cells, "
              << layout.products.size() << " products, " << layout.checkouts.size()
              << " checkout lanes, " << layout.entrances.size() << " entrances, "
              << layout.exits.size() << " exits\n";
    return 0;
  }
  for (const Violation& v : report.violations) std::cerr << v.message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black Friday store exposure simulator"};
  app.require_subcommand(1);

  std::string config_path, layout_path, out_path, spec_path, preset, ppm_path;
  std::optional<int> seeds;
  int jobs = 1;
  double distance_ft = 6.0;
  std::uint64_t gen_seed = kDefaultLayoutSeed;
  Overrides ov;

  auto* simulate = app.add_subcommand("simulate", "run one simulation");
  simulate->add_option("--config", config_path, "flat key=value config file");
  simulate->add_option("--layout", layout_path, "layout file (default: built-in layout)");
  simulate->add_option("--out", out_path, "results CSV path");
  add_override_flags(*simulate, ov);

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  sweep->add_option("--config", spec_path, "sweep spec file");
  sweep->add_option("--preset", preset, "table2_5 | table6_7 | table8_9 | table10_11");
  sweep->add_option("--layout", layout_path, "layout file (default: built-in layout)");
  sweep->add_option("--out", out_path, "results CSV path");
  sweep->add_option("--seeds", seeds, "use seeds 1..N");
  sweep->add_option("--jobs", jobs, "parallel workers");
  add_override_flags(*sweep, ov);

  auto* render = app.add_subcommand("render-layout", "print a layout as text");
  render->add_option("--layout", layout_path, "layout file (default: built-in layout)");
  render->add_option("--out", out_path, "write the text here instead of stdout");
  render->add_option("--ppm", ppm_path, "also write a P6 pixmap image");

  auto* neighborhood = app.add_subcommand("neighborhood", "print a vulnerable-neighborhood figure");
  neighborhood->add_option("--distance-ft", distance_ft, "max exposure distance in feet");

  auto* validate = app.add_subcommand("validate", "check a layout file");
  validate->add_option("--layout", layout_path, "layout file (default: built-in layout)");

  auto* gen = app.add_subcommand("gen-layout", "generate a store layout");
  gen->add_option("--seed", gen_seed, "layout generator seed");
  gen->add_option("--out", out_path, "layout file destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, layout_path, ov, out_path);
    if (sweep->parsed()) return cmd_sweep(spec_path, preset, layout_path, seeds, jobs, ov, out_path);
    if (render->parsed()) {
      const StoreLayout layout =
          layout_path.empty() ? generate_default_layout() : parse_layout(read_file(layout_path));
      const std::string text = render_layout(layout);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      if (!ppm_path.empty()) write_file(ppm_path, layout_ppm(layout));
      return 0;
    }
    if (neighborhood->parsed()) {
      std::cout << render_neighborhood(vulnerable_neighborhood(distance_ft, 5.0));
      return 0;
    }
    if (validate->parsed()) return cmd_validate(layout_path);
    if (gen->parsed()) {
      const StoreLayout layout = generate_default_layout(gen_seed);
      const std::string text = render_layout(layout);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
