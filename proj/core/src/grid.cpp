#include "rushsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace rushsim {

StoreLayout StoreLayout::open(int width, int height, double cell_feet) {
  StoreLayout layout;
  layout.width_cells = width;
  layout.height_cells = height;
  layout.cell_size_feet = cell_feet;
  layout.cells.assign(static_cast<std::size_t>(width) * height, CellKind{});
  return layout;
}

double center_distance(CellCoord a, CellCoord b, double cell_size_feet) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return cell_size_feet * std::sqrt(dx * dx + dy * dy);
}

NeighborhoodMask vulnerable_neighborhood(double max_distance_feet, double cell_size_feet) {
  NeighborhoodMask mask;
  mask.max_distance_feet = max_distance_feet;
  const int reach = static_cast<int>(std::floor(max_distance_feet / cell_size_feet));
  const double d2 = max_distance_feet * max_distance_feet;
  for (int dy = -reach; dy <= reach; ++dy) {
    for (int dx = -reach; dx <= reach; ++dx) {
      // Inclusive cutoff, compared on squared distances so exact cases such
      // as a two-cell orthogonal offset at 10' stay inside.
      const double r2 = cell_size_feet * cell_size_feet * (dx * dx + dy * dy);
      if (r2 <= d2) mask.offsets.emplace_back(dx, dy);
    }
  }
  return mask;
}

namespace {

int lane_id_for(char glyph) {
  const auto pos = kLaneGlyphs.find(glyph);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

}  // namespace

StoreLayout parse_layout(std::string_view text) {
  std::istringstream in{std::string(text)};
  int cols = 0, rows = 0;
  double cell_feet = 0.0;
  std::string header;
  if (!std::getline(in, header))
    throw LayoutError(LayoutError::Kind::MalformedGrid, "empty layout file");
  {
    std::istringstream hs(header);
    if (!(hs >> cols >> rows >> cell_feet) || cols <= 0 || rows <= 0 || cell_feet <= 0)
      throw LayoutError(LayoutError::Kind::MalformedGrid, "bad layout header: " + header);
  }

  StoreLayout layout = StoreLayout::open(cols, rows, cell_feet);
  // lane id -> cells seen, in reading order (register first, queue second)
  std::vector<std::vector<CellCoord>> lane_cells(kLaneGlyphs.size());

  for (int row = 0; row < rows; ++row) {
    std::string line;
    if (!std::getline(in, line))
      throw LayoutError(LayoutError::Kind::MalformedGrid, "layout file truncated at grid row " +
                                                              std::to_string(row));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != cols)
      throw LayoutError(LayoutError::Kind::MalformedGrid,
                        "ragged row " + std::to_string(row) + ": expected " +
                            std::to_string(cols) + " glyphs, got " + std::to_string(line.size()));
    const int y = rows - 1 - row;  // file lists the top of the store first
    for (int x = 0; x < cols; ++x) {
      const char g = line[static_cast<std::size_t>(x)];
      const CellCoord c{x, y};
      CellKind& kind = layout.at(c);
      switch (g) {
        case '.':
          kind.type = CellType::Open;
          break;
        case '#':
          kind.type = CellType::Blocked;
          break;
        case 'P':
          kind.type = CellType::Product;
          break;
        case 'E':
          kind.type = CellType::Entrance;
          break;
        case 'X':
          kind.type = CellType::Exit;
          break;
        default: {
          const int lane = lane_id_for(g);
          if (lane < 0)
            throw LayoutError(LayoutError::Kind::MalformedGrid,
                              std::string("unknown glyph '") + g + "' at row " +
                                  std::to_string(row) + " col " + std::to_string(x));
          kind.type = CellType::Checkout;
          lane_cells[static_cast<std::size_t>(lane)].push_back(c);
          break;
        }
      }
    }
  }

  // Ids follow reading order (top row first, left to right) so that
  // rendering and reparsing reproduces them.
  for (int row = 0; row < rows; ++row) {
    const int y = rows - 1 - row;
    for (int x = 0; x < cols; ++x) {
      const CellCoord c{x, y};
      CellKind& kind = layout.at(c);
      switch (kind.type) {
        case CellType::Product:
          kind.id = static_cast<std::int16_t>(layout.products.size());
          layout.products.push_back(c);
          break;
        case CellType::Entrance:
          kind.id = static_cast<std::int16_t>(layout.entrances.size());
          layout.entrances.push_back(c);
          break;
        case CellType::Exit:
          kind.id = static_cast<std::int16_t>(layout.exits.size());
          layout.exits.push_back(c);
          break;
        default:
          break;
      }
    }
  }

  for (std::size_t lane = 0; lane < lane_cells.size(); ++lane) {
    const auto& cells = lane_cells[lane];
    if (cells.empty()) continue;
    if (cells.size() != 2)
      throw LayoutError(LayoutError::Kind::RegistryMismatch,
                        "checkout lane '" + std::string(1, kLaneGlyphs[lane]) + "' appears " +
                            std::to_string(cells.size()) + " times, expected 2");
    CheckoutLane entry;
    entry.lane_id = static_cast<int>(layout.checkouts.size());
    entry.register_cell = cells[0];
    entry.queue_cell = cells[1];
    layout.at(entry.register_cell).id = static_cast<std::int16_t>(entry.lane_id);
    layout.at(entry.register_cell).slot = CheckoutSlot::Register;
    layout.at(entry.queue_cell).id = static_cast<std::int16_t>(entry.lane_id);
    layout.at(entry.queue_cell).slot = CheckoutSlot::Queue;
    layout.checkouts.push_back(entry);
  }

  const ValidationReport report = validate_layout(layout);
  for (const Violation& v : report.violations) {
    if (v.kind == Violation::Kind::UnreachableCell)
      throw LayoutError(LayoutError::Kind::UnreachableCell, v.message);
  }
  if (!report.ok())
    throw LayoutError(LayoutError::Kind::RegistryMismatch, report.violations.front().message);
  return layout;
}

std::vector<char> reachable_from_entrances(const StoreLayout& layout) {
  std::vector<char> seen(layout.cells.size(), 0);
  std::deque<CellCoord> frontier;
  for (const CellCoord e : layout.entrances) {
    if (!layout.traversable(e)) continue;
    if (seen[static_cast<std::size_t>(layout.cell_index(e))]) continue;
    seen[static_cast<std::size_t>(layout.cell_index(e))] = 1;
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    const CellCoord c = frontier.front();
    frontier.pop_front();
    const CellCoord around[4] = {{c.x, c.y + 1}, {c.x + 1, c.y}, {c.x, c.y - 1}, {c.x - 1, c.y}};
    for (const CellCoord n : around) {
      if (!layout.traversable(n)) continue;
      char& mark = seen[static_cast<std::size_t>(layout.cell_index(n))];
      if (mark) continue;
      mark = 1;
      frontier.push_back(n);
    }
  }
  return seen;
}

namespace {

std::string coord_str(CellCoord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

void check_registry_cell(const StoreLayout& layout, CellCoord c, CellType expected, int id,
                         const char* what, std::vector<Violation>& out) {
  if (!layout.in_bounds(c)) {
    out.push_back({Violation::Kind::RegistryMismatch, c,
                   std::string(what) + " " + coord_str(c) + " out of bounds"});
    return;
  }
  const CellKind& kind = layout.at(c);
  if (kind.type != expected || kind.id != id)
    out.push_back({Violation::Kind::RegistryMismatch, c,
                   std::string(what) + " registry disagrees with grid at " + coord_str(c)});
}

}  // namespace

ValidationReport validate_layout(const StoreLayout& layout) {
  ValidationReport report;
  auto& out = report.violations;

  if (layout.width_cells <= 0 || layout.height_cells <= 0 ||
      layout.cells.size() != static_cast<std::size_t>(layout.width_cells) * layout.height_cells) {
    out.push_back({Violation::Kind::BadDimensions, {}, "cell array does not match dimensions"});
    return report;
  }

  for (std::size_t i = 0; i < layout.products.size(); ++i)
    check_registry_cell(layout, layout.products[i], CellType::Product, static_cast<int>(i),
                        "product", out);
  for (std::size_t i = 0; i < layout.entrances.size(); ++i)
    check_registry_cell(layout, layout.entrances[i], CellType::Entrance, static_cast<int>(i),
                        "entrance", out);
  for (std::size_t i = 0; i < layout.exits.size(); ++i)
    check_registry_cell(layout, layout.exits[i], CellType::Exit, static_cast<int>(i), "exit", out);
  for (const CheckoutLane& lane : layout.checkouts) {
    check_registry_cell(layout, lane.register_cell, CellType::Checkout, lane.lane_id, "register",
                        out);
    check_registry_cell(layout, lane.queue_cell, CellType::Checkout, lane.lane_id, "queue", out);
    if (layout.in_bounds(lane.register_cell) && layout.at(lane.register_cell).type == CellType::Checkout &&
        layout.at(lane.register_cell).slot != CheckoutSlot::Register)
      out.push_back({Violation::Kind::RegistryMismatch, lane.register_cell,
                     "register cell marked as queue at " + coord_str(lane.register_cell)});
  }

  // Every cell with a registry type must appear in its registry.
  std::size_t product_cells = 0, entrance_cells = 0, exit_cells = 0, checkout_cells = 0;
  for (const CellKind& kind : layout.cells) {
    switch (kind.type) {
      case CellType::Product: ++product_cells; break;
      case CellType::Entrance: ++entrance_cells; break;
      case CellType::Exit: ++exit_cells; break;
      case CellType::Checkout: ++checkout_cells; break;
      default: break;
    }
  }
  if (product_cells != layout.products.size())
    out.push_back({Violation::Kind::RegistryMismatch, {}, "product cell/registry count mismatch"});
  if (entrance_cells != layout.entrances.size())
    out.push_back({Violation::Kind::RegistryMismatch, {}, "entrance cell/registry count mismatch"});
  if (exit_cells != layout.exits.size())
    out.push_back({Violation::Kind::RegistryMismatch, {}, "exit cell/registry count mismatch"});
  if (checkout_cells != 2 * layout.checkouts.size())
    out.push_back({Violation::Kind::RegistryMismatch, {}, "checkout cell/registry count mismatch"});

  if (!out.empty()) return report;

  const std::vector<char> seen = reachable_from_entrances(layout);
  auto require_reachable = [&](CellCoord c, const char* what) {
    if (!seen[static_cast<std::size_t>(layout.cell_index(c))])
      out.push_back({Violation::Kind::UnreachableCell, c,
                     std::string(what) + " " + coord_str(c) + " unreachable from entrances"});
  };
  for (const CellCoord c : layout.products) require_reachable(c, "product");
  for (const CheckoutLane& lane : layout.checkouts) {
    require_reachable(lane.register_cell, "register");
    require_reachable(lane.queue_cell, "queue");
  }
  for (const CellCoord c : layout.exits) require_reachable(c, "exit");
  return report;
}

}  // namespace rushsim
