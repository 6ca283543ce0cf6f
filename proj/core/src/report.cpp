#include "rushsim/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rushsim/config.hpp"

namespace rushsim {

namespace {

constexpr const char* kArtifactVersion = "1.0.0";

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void append_row(std::string& out, double distance, int threshold, double fraction, bool spread,
                std::uint64_t seed, int starting, int newly, int total, int spawned,
                int in_store) {
  out += fixed6(distance);
  out += ',';
  out += std::to_string(threshold);
  out += ',';
  out += fixed6(fraction);
  out += ',';
  out += spread ? '1' : '0';
  out += ',';
  out += std::to_string(seed);
  out += ',';
  out += std::to_string(starting);
  out += ',';
  out += std::to_string(newly);
  out += ',';
  out += std::to_string(total);
  out += ',';
  out += std::to_string(spawned);
  out += ',';
  out += std::to_string(in_store);
  out += '\n';
}

}  // namespace

std::string results_csv(const SweepResult& result) {
  std::string out = kResultsCsvHeader;
  out += '\n';
  for (const SweepRow& r : result.rows)
    append_row(out, r.distance_ft, r.threshold_s, r.seed_fraction, r.spread, r.seed,
               r.starting_infective, r.newly_infected, r.total_customers, r.spawned,
               r.still_in_store);
  return out;
}

std::string results_csv(const RunResult& result) {
  std::string out = kResultsCsvHeader;
  out += '\n';
  const ExposureParams& e = result.config.exposure;
  append_row(out, e.max_distance_feet, e.threshold_seconds, e.seed_fraction,
             e.newly_infected_spread, result.config.seed, result.starting_infective,
             result.newly_infected, result.total_customers, result.spawned,
             result.still_in_store);
  return out;
}

std::vector<SweepRow> parse_results_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kResultsCsvHeader)
    throw ReportError(ReportError::Kind::BadCsv, "missing or wrong results header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRow row{};
    int spread = 0;
    unsigned long long seed = 0;
    if (std::sscanf(line.c_str(), "%lf,%d,%lf,%d,%llu,%d,%d,%d,%d,%d", &row.distance_ft,
                    &row.threshold_s, &row.seed_fraction, &spread, &seed,
                    &row.starting_infective, &row.newly_infected, &row.total_customers,
                    &row.spawned, &row.still_in_store) != 10)
      throw ReportError(ReportError::Kind::BadCsv, "bad results row: " + line);
    row.spread = spread != 0;
    row.seed = seed;
    rows.push_back(row);
  }
  return rows;
}

namespace {

char glyph_for(const CellKind& kind) {
  switch (kind.type) {
    case CellType::Open: return '.';
    case CellType::Blocked: return '#';
    case CellType::Product: return 'P';
    case CellType::Entrance: return 'E';
    case CellType::Exit: return 'X';
    case CellType::Checkout: return kLaneGlyphs[static_cast<std::size_t>(kind.id)];
  }
  return '?';
}

}  // namespace

std::string render_layout(const StoreLayout& layout) {
  std::string out = std::to_string(layout.width_cells) + " " + std::to_string(layout.height_cells) +
                    " " + fixed6(layout.cell_size_feet) + "\n";
  for (int y = layout.height_cells - 1; y >= 0; --y) {
    for (int x = 0; x < layout.width_cells; ++x) out += glyph_for(layout.at({x, y}));
    out += '\n';
  }
  return out;
}

std::string layout_ppm(const StoreLayout& layout) {
  std::string out = "P6\n" + std::to_string(layout.width_cells) + " " +
                    std::to_string(layout.height_cells) + "\n255\n";
  auto push = [&out](int r, int g, int b) {
    out += static_cast<char>(r);
    out += static_cast<char>(g);
    out += static_cast<char>(b);
  };
  for (int y = layout.height_cells - 1; y >= 0; --y)
    for (int x = 0; x < layout.width_cells; ++x) {
      switch (layout.at({x, y}).type) {
        case CellType::Open: push(255, 255, 255); break;
        case CellType::Blocked: push(0, 0, 0); break;
        case CellType::Product: push(220, 30, 30); break;
        case CellType::Checkout: push(40, 80, 220); break;
        case CellType::Entrance: push(250, 210, 40); break;
        case CellType::Exit: push(40, 180, 60); break;
      }
    }
  return out;
}

std::uint64_t layout_checksum(const StoreLayout& layout) {
  const std::string text = render_layout(layout);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : text) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string render_neighborhood(const NeighborhoodMask& mask) {
  int reach = 0;
  for (const auto& [dx, dy] : mask.offsets) reach = std::max({reach, std::abs(dx), std::abs(dy)});
  std::string out;
  for (int dy = reach; dy >= -reach; --dy) {
    for (int dx = -reach; dx <= reach; ++dx) {
      const bool inside = std::find(mask.offsets.begin(), mask.offsets.end(),
                                    std::make_pair(dx, dy)) != mask.offsets.end();
      out += (dx == 0 && dy == 0) ? 'I' : (inside ? '*' : '.');
      if (dx < reach) out += ' ';
    }
    out += '\n';
  }
  out += "max distance " + fixed6(mask.max_distance_feet) + " ft, " +
         std::to_string(mask.offsets.size()) + " vulnerable cells\n";
  return out;
}

std::string render_snapshot(const Engine& engine) {
  const StoreLayout& layout = engine.layout();
  std::vector<int> occupancy(layout.cells.size(), 0);
  for (const Customer& c : engine.customers())
    if (c.in_store()) ++occupancy[static_cast<std::size_t>(layout.cell_index(c.position))];

  std::string out = "tick " + std::to_string(engine.current_tick()) + "\n";
  for (int y = layout.height_cells - 1; y >= 0; --y) {
    for (int x = 0; x < layout.width_cells; ++x) {
      const int n = occupancy[static_cast<std::size_t>(layout.cell_index({x, y}))];
      out += n > 0 ? static_cast<char>('0' + std::min(n, 9)) : glyph_for(layout.at({x, y}));
    }
    out += '\n';
  }
  return out;
}

std::string snapshot_at(const StoreLayout& layout, const SimulationConfig& config, int tick) {
  if (tick < 0 || tick > config.duration_seconds)
    throw ReportError(ReportError::Kind::TickOutOfRange,
                      "tick " + std::to_string(tick) + " outside [0, " +
                          std::to_string(config.duration_seconds) + "]");
  Engine engine(layout, config);
  engine.run_to(tick);
  return render_snapshot(engine);
}

std::string events_csv(const RunResult& result) {
  std::string out = "tick,customer_id,event,detail\n";
  for (const Event& e : result.events)
    out += std::to_string(e.tick) + "," + std::to_string(e.customer_id) + "," + e.event + "," +
           e.detail + "\n";
  return out;
}

std::string run_manifest(const SimulationConfig& config, std::uint64_t checksum,
                         std::string_view layout_source) {
  std::ostringstream out;
  out << "artifact_version = " << kArtifactVersion << "\n";
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  out << "created_utc = " << stamp << "\n";
  out << "layout = " << (layout_source.empty() ? "builtin-default" : layout_source) << "\n";
  char cs[24];
  std::snprintf(cs, sizeof cs, "%016llx", static_cast<unsigned long long>(checksum));
  out << "layout_checksum = " << cs << "\n";
  out << "seed = " << config.seed << "\n";
  out << "duration_seconds = " << config.duration_seconds << "\n";
  out << "checkout_service_seconds = " << config.checkout_service_seconds << "\n";
  out << "pathfind_mode = " << to_string(config.pathfind_mode) << "\n";
  out << "accrual = " << to_string(config.accrual) << "\n";
  out << "greedy_by_path = " << (config.greedy_by_path ? 1 : 0) << "\n";
  out << "log_events = " << (config.log_events ? 1 : 0) << "\n";
  out << "max_distance_feet = " << fixed6(config.exposure.max_distance_feet) << "\n";
  out << "threshold_seconds = " << config.exposure.threshold_seconds << "\n";
  out << "seed_fraction = " << fixed6(config.exposure.seed_fraction) << "\n";
  out << "newly_infected_spread = " << (config.exposure.newly_infected_spread ? 1 : 0) << "\n";
  for (const ArrivalPhase& p : config.schedule.phases)
    out << "phase = " << p.start_s << "," << p.end_s << "," << fixed6(p.rate_per_s) << "\n";
  return out.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ReportError(ReportError::Kind::DestinationUnwritable, "cannot open " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ReportError(ReportError::Kind::DestinationUnwritable, "short write to " + path);
}

}  // namespace rushsim
