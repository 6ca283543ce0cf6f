#include "rushsim/config.hpp"

#include <charconv>
#include <sstream>

namespace rushsim {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

double to_double(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
  }
}

long long to_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + value + "'");
  }
}

bool to_bool(const std::string& value, const std::string& key) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  throw ConfigError("bad boolean value for " + key + ": '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

ArrivalPhase parse_phase(const std::string& value) {
  const auto parts = split_list(value);
  if (parts.size() != 3) throw ConfigError("phase needs start_s,end_s,rate_per_s: '" + value + "'");
  ArrivalPhase p;
  p.start_s = static_cast<int>(to_int(parts[0], "phase.start_s"));
  p.end_s = static_cast<int>(to_int(parts[1], "phase.end_s"));
  p.rate_per_s = to_double(parts[2], "phase.rate_per_s");
  return p;
}

// Applies one simulate-level key; returns false if the key is unknown.
bool apply_sim_key(SimulationConfig& sim, std::string* layout_path, bool* saw_phase,
                   const std::string& key, const std::string& value) {
  if (key == "duration_seconds") {
    sim.duration_seconds = static_cast<int>(to_int(value, key));
  } else if (key == "seed") {
    sim.seed = static_cast<std::uint64_t>(to_int(value, key));
  } else if (key == "checkout_service_seconds") {
    sim.checkout_service_seconds = static_cast<int>(to_int(value, key));
  } else if (key == "pathfind_mode") {
    sim.pathfind_mode = pathfind_mode_from(value);
  } else if (key == "accrual") {
    sim.accrual = accrual_rule_from(value);
  } else if (key == "log_events") {
    sim.log_events = to_bool(value, key);
  } else if (key == "greedy_by_path") {
    sim.greedy_by_path = to_bool(value, key);
  } else if (key == "max_distance_feet") {
    sim.exposure.max_distance_feet = to_double(value, key);
  } else if (key == "threshold_seconds") {
    sim.exposure.threshold_seconds = static_cast<int>(to_int(value, key));
  } else if (key == "seed_fraction") {
    sim.exposure.seed_fraction = to_double(value, key);
  } else if (key == "newly_infected_spread") {
    sim.exposure.newly_infected_spread = to_bool(value, key);
  } else if (key == "layout") {
    *layout_path = value;
  } else if (key == "phase") {
    if (!*saw_phase) sim.schedule.phases.clear();
    *saw_phase = true;
    sim.schedule.phases.push_back(parse_phase(value));
  } else {
    return false;
  }
  return true;
}

template <typename Fn>
void for_each_entry(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string entry = trim(line);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    fn(trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
  }
}

}  // namespace

FileConfig parse_config(std::string_view text) {
  FileConfig out;
  bool saw_phase = false;
  for_each_entry(text, [&](const std::string& key, const std::string& value) {
    if (!apply_sim_key(out.sim, &out.layout_path, &saw_phase, key, value))
      throw ConfigError("unknown config key: " + key);
  });
  out.sim.validate();
  return out;
}

FileSweepSpec parse_sweep_spec(std::string_view text) {
  FileSweepSpec out;
  bool saw_phase = false;
  for_each_entry(text, [&](const std::string& key, const std::string& value) {
    if (key == "distances_feet") {
      out.spec.distances_feet.clear();
      for (const auto& v : split_list(value)) out.spec.distances_feet.push_back(to_double(v, key));
    } else if (key == "thresholds_seconds") {
      out.spec.thresholds_seconds.clear();
      for (const auto& v : split_list(value))
        out.spec.thresholds_seconds.push_back(static_cast<int>(to_int(v, key)));
    } else if (key == "seed_fractions") {
      out.spec.seed_fractions.clear();
      for (const auto& v : split_list(value)) out.spec.seed_fractions.push_back(to_double(v, key));
    } else if (key == "spread_flags") {
      out.spec.spread_flags.clear();
      for (const auto& v : split_list(value)) out.spec.spread_flags.push_back(to_bool(v, key));
    } else if (key == "seeds") {
      out.spec.seeds.clear();
      for (const auto& v : split_list(value))
        out.spec.seeds.push_back(static_cast<std::uint64_t>(to_int(v, key)));
    } else if (!apply_sim_key(out.spec.base, &out.layout_path, &saw_phase, key, value)) {
      throw ConfigError("unknown sweep spec key: " + key);
    }
  });
  out.spec.validate();
  return out;
}

std::string to_string(PathfindMode mode) {
  return mode == PathfindMode::Standard ? "standard" : "paper_literal";
}

std::string to_string(AccrualRule rule) {
  return rule == AccrualRule::PerTick ? "per_tick" : "per_infective";
}

PathfindMode pathfind_mode_from(std::string_view s) {
  if (s == "standard") return PathfindMode::Standard;
  if (s == "paper_literal") return PathfindMode::PaperLiteral;
  throw ConfigError("pathfind_mode must be standard or paper_literal, got '" + std::string(s) + "'");
}

AccrualRule accrual_rule_from(std::string_view s) {
  if (s == "per_tick") return AccrualRule::PerTick;
  if (s == "per_infective") return AccrualRule::PerInfective;
  throw ConfigError("accrual must be per_tick or per_infective, got '" + std::string(s) + "'");
}

}  // namespace rushsim
