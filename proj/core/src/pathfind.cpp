#include "rushsim/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <queue>

namespace rushsim {

double g_score(CellCoord initial, CellCoord current, double cell_size_feet) {
  return center_distance(initial, current, cell_size_feet);
}

double h_score(CellCoord current, CellCoord target, double cell_size_feet) {
  return (std::abs(target.y - current.y) + std::abs(target.x - current.x)) * cell_size_feet;
}

double f_score(double g, double h) { return g + h; }

namespace {

struct OpenNode {
  double f;
  double g;
  std::uint64_t order;  // push sequence; neighbors pushed N,E,S,W
  int cell;
};

struct OpenNodeWorse {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g > b.g;
    return a.order > b.order;
  }
};

void check_endpoint(const StoreLayout& layout, CellCoord c, const char* what) {
  if (!layout.traversable(c))
    throw PathError(PathError::Kind::InvalidEndpoint,
                    std::string(what) + " (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                        ") is blocked or out of bounds");
}

Path trace(const StoreLayout& layout, const std::vector<int>& parent, CellCoord start,
           CellCoord goal) {
  Path path;
  int cell = layout.cell_index(goal);
  const int start_cell = layout.cell_index(start);
  while (cell != start_cell) {
    path.cells.push_back({cell % layout.width_cells, cell / layout.width_cells});
    cell = parent[static_cast<std::size_t>(cell)];
  }
  path.cells.push_back(start);
  std::reverse(path.cells.begin(), path.cells.end());
  path.length_feet = (static_cast<double>(path.cells.size()) - 1) * layout.cell_size_feet;
  return path;
}

}  // namespace

Path plan_path(const StoreLayout& layout, CellCoord start, CellCoord goal, PathfindMode mode) {
  check_endpoint(layout, start, "start");
  check_endpoint(layout, goal, "goal");
  if (start == goal) return Path{{start}, 0.0};

  const double cell_feet = layout.cell_size_feet;
  const std::size_t n = layout.cells.size();
  std::vector<double> best_g(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);
  std::priority_queue<OpenNode, std::vector<OpenNode>, OpenNodeWorse> open;
  std::uint64_t order = 0;

  const int start_cell = layout.cell_index(start);
  const int goal_cell = layout.cell_index(goal);
  best_g[static_cast<std::size_t>(start_cell)] = 0.0;
  open.push({h_score(start, goal, cell_feet), 0.0, order++, start_cell});

  while (!open.empty()) {
    const OpenNode node = open.top();
    open.pop();
    if (closed[static_cast<std::size_t>(node.cell)]) continue;
    closed[static_cast<std::size_t>(node.cell)] = 1;
    if (node.cell == goal_cell) return trace(layout, parent, start, goal);

    const CellCoord c{node.cell % layout.width_cells, node.cell / layout.width_cells};
    const CellCoord around[4] = {{c.x, c.y + 1}, {c.x + 1, c.y}, {c.x, c.y - 1}, {c.x - 1, c.y}};
    for (const CellCoord nb : around) {
      if (!layout.traversable(nb)) continue;
      const int nb_cell = layout.cell_index(nb);
      if (closed[static_cast<std::size_t>(nb_cell)]) continue;
      const double g = mode == PathfindMode::Standard
                           ? best_g[static_cast<std::size_t>(node.cell)] + cell_feet
                           : g_score(start, nb, cell_feet);
      // In PaperLiteral mode g ignores the route taken, so a cell is pushed
      // once; in Standard mode a shorter route relaxes it.
      if (mode == PathfindMode::Standard) {
        if (g >= best_g[static_cast<std::size_t>(nb_cell)]) continue;
      } else {
        if (parent[static_cast<std::size_t>(nb_cell)] != -1) continue;
      }
      best_g[static_cast<std::size_t>(nb_cell)] = g;
      parent[static_cast<std::size_t>(nb_cell)] = node.cell;
      open.push({f_score(g, h_score(nb, goal, cell_feet)), g, order++, nb_cell});
    }
  }
  throw PathError(PathError::Kind::NoPath, "goal unreachable from start");
}

std::optional<int> bfs_shortest_length(const StoreLayout& layout, CellCoord start, CellCoord goal) {
  check_endpoint(layout, start, "start");
  check_endpoint(layout, goal, "goal");
  if (start == goal) return 0;

  std::vector<int> dist(layout.cells.size(), -1);
  std::deque<int> frontier;
  dist[static_cast<std::size_t>(layout.cell_index(start))] = 0;
  frontier.push_back(layout.cell_index(start));
  const int goal_cell = layout.cell_index(goal);

  while (!frontier.empty()) {
    const int cell = frontier.front();
    frontier.pop_front();
    const CellCoord c{cell % layout.width_cells, cell / layout.width_cells};
    const CellCoord around[4] = {{c.x, c.y + 1}, {c.x + 1, c.y}, {c.x, c.y - 1}, {c.x - 1, c.y}};
    for (const CellCoord nb : around) {
      if (!layout.traversable(nb)) continue;
      const int nb_cell = layout.cell_index(nb);
      if (dist[static_cast<std::size_t>(nb_cell)] != -1) continue;
      dist[static_cast<std::size_t>(nb_cell)] = dist[static_cast<std::size_t>(cell)] + 1;
      if (nb_cell == goal_cell) return dist[static_cast<std::size_t>(nb_cell)];
      frontier.push_back(nb_cell);
    }
  }
  return std::nullopt;
}

const Path& PathPlanner::plan(CellCoord start, CellCoord goal) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(layout_.cell_index(start))) << 32) |
      static_cast<std::uint32_t>(layout_.cell_index(goal));
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, plan_path(layout_, start, goal, mode_)).first;
  return it->second;
}

}  // namespace rushsim
