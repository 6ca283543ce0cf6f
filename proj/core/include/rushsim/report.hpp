#ifndef RUSHSIM_REPORT_HPP
#define RUSHSIM_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "rushsim/engine.hpp"
#include "rushsim/sweep.hpp"

namespace rushsim {

struct ReportError : std::runtime_error {
  enum class Kind { DestinationUnwritable, TickOutOfRange, BadCsv };
  ReportError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

inline constexpr const char* kResultsCsvHeader =
    "distance_ft,threshold_s,seed_fraction,spread,seed,starting_infective,"
    "newly_infected,total_customers,spawned,still_in_store";

/// One CSV row per run, header as above, floats fixed to 6 decimals.
std::string results_csv(const SweepResult& result);
std::string results_csv(const RunResult& result);
/// Inverse of results_csv, for round-trip checks and downstream tooling.
std::vector<SweepRow> parse_results_csv(std::string_view text);

/// Layout in the layout file format; parse_layout(render_layout(l)) == l.
std::string render_layout(const StoreLayout& layout);
/// Binary P6 pixmap of the layout, one pixel per cell.
std::string layout_ppm(const StoreLayout& layout);
/// FNV-1a over the rendered layout text; pins the layout in manifests.
std::uint64_t layout_checksum(const StoreLayout& layout);

/// Square figure centered on the infective cell: 'I' center, '*' vulnerable,
/// '.' outside, with a cell-count legend.
std::string render_neighborhood(const NeighborhoodMask& mask);

/// Current customer positions over the layout glyphs; per-cell occupant
/// count as a digit, capped at 9.
std::string render_snapshot(const Engine& engine);
/// Runs a fresh engine to `tick` and renders it. Throws TickOutOfRange when
/// tick exceeds the configured duration.
std::string snapshot_at(const StoreLayout& layout, const SimulationConfig& config, int tick);

/// One line per event: tick,customer_id,event,detail.
std::string events_csv(const RunResult& result);

/// Flat key=value run manifest: config echo, seed, layout checksum,
/// artifact version and timestamp. Manifest + layout file fully determine a
/// run's outputs.
std::string run_manifest(const SimulationConfig& config, std::uint64_t layout_checksum,
                         std::string_view layout_source);

/// Writes text to a file; ReportError::DestinationUnwritable on failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace rushsim

#endif
