#ifndef RUSHSIM_PATHFIND_HPP
#define RUSHSIM_PATHFIND_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rushsim/grid.hpp"

namespace rushsim {

/// Two A* flavors. Standard uses accumulated path cost for g and is
/// guaranteed shortest. PaperLiteral scores g as the straight-line distance
/// from the start cell, which keeps the original scoring but gives up the
/// optimality guarantee; it is kept selectable for fidelity experiments.
enum class PathfindMode { Standard, PaperLiteral };

struct Path {
  std::vector<CellCoord> cells;  // start..goal inclusive
  double length_feet = 0.0;      // (cells.size() - 1) * cell_size_feet
  int steps() const { return static_cast<int>(cells.size()) - 1; }
};

struct PathError : std::runtime_error {
  enum class Kind { NoPath, InvalidEndpoint };
  PathError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

/// g: Euclidean distance in feet between the initial and current cell centers.
double g_score(CellCoord initial, CellCoord current, double cell_size_feet);
/// h: Manhattan distance in feet between the current and target cell centers.
double h_score(CellCoord current, CellCoord target, double cell_size_feet);
/// f = g + h.
double f_score(double g, double h);

/// A* over 4-connected traversable cells. Deterministic: ties on f break on
/// smaller g, then on push order (neighbors expanded North, East, South,
/// West). Throws PathError on blocked/out-of-bounds endpoints or when no
/// path exists.
Path plan_path(const StoreLayout& layout, CellCoord start, CellCoord goal, PathfindMode mode);

/// Breadth-first-search oracle: exact 4-connected shortest step count, or
/// nullopt when the goal is unreachable. Throws PathError::InvalidEndpoint
/// like plan_path. Independent of the A* implementation.
std::optional<int> bfs_shortest_length(const StoreLayout& layout, CellCoord start, CellCoord goal);

/// Memoizing wrapper around plan_path for one layout and mode. Customers
/// travel between a small set of landmark cells (entrances, products,
/// checkouts, exits), so nearly every request is a cache hit.
class PathPlanner {
 public:
  PathPlanner(const StoreLayout& layout, PathfindMode mode) : layout_(layout), mode_(mode) {}

  const Path& plan(CellCoord start, CellCoord goal);

 private:
  const StoreLayout& layout_;
  PathfindMode mode_;
  std::unordered_map<std::uint64_t, Path> cache_;
};

}  // namespace rushsim

#endif
