#include <algorithm>
#include <string>

#include "rushsim/grid.hpp"
#include "rushsim/rng.hpp"

namespace rushsim {

// Canonical store: 80x60 cells of 5' (120,000 ft^2). Front wall on y=0 with
// three entrances on the left half and three exits on the right, 21 checkout
// lanes just behind it (register above its queue so the register comes first
// in reading order), and ten two-row shelf bands in the interior separated
// by cross corridors. Product cells are sampled next to shelves with the
// given seed.
StoreLayout generate_default_layout(std::uint64_t seed) {
  constexpr int kWidth = 80;
  constexpr int kHeight = 60;
  constexpr int kProducts = 34;
  constexpr int kLanes = 21;

  StoreLayout layout = StoreLayout::open(kWidth, kHeight, 5.0);

  // Front wall: everything blocked except doors.
  for (int x = 0; x < kWidth; ++x) layout.at({x, 0}).type = CellType::Blocked;
  const int entrance_x[3] = {10, 20, 30};
  const int exit_x[3] = {50, 60, 70};
  for (int i = 0; i < 3; ++i) {
    layout.at({entrance_x[i], 0}) = {CellType::Entrance, static_cast<std::int16_t>(-1), {}};
    layout.at({exit_x[i], 0}) = {CellType::Exit, static_cast<std::int16_t>(-1), {}};
  }

  // Checkout lanes across the front: queue on y=3, register on y=4.
  for (int lane = 0; lane < kLanes; ++lane) {
    const int x = 6 + 3 * lane;  // x = 6..66
    CheckoutLane entry;
    entry.lane_id = lane;
    entry.register_cell = {x, 4};
    entry.queue_cell = {x, 3};
    layout.at(entry.register_cell) = {CellType::Checkout, static_cast<std::int16_t>(lane),
                                      CheckoutSlot::Register};
    layout.at(entry.queue_cell) = {CellType::Checkout, static_cast<std::int16_t>(lane),
                                   CheckoutSlot::Queue};
    layout.checkouts.push_back(entry);
  }

  // Shelf bands: rows {8,9}, {13,14}, ... {53,54}; four column segments with
  // three cross corridors plus open margins at both sides.
  const int seg_lo[4] = {4, 22, 40, 58};
  const int seg_hi[4] = {18, 36, 54, 74};  // inclusive
  for (int band = 0; band < 10; ++band) {
    const int y = 8 + 5 * band;
    for (int s = 0; s < 4; ++s)
      for (int x = seg_lo[s]; x <= seg_hi[s]; ++x) {
        layout.at({x, y}).type = CellType::Blocked;
        layout.at({x, y + 1}).type = CellType::Blocked;
      }
  }

  // Product candidates: open cells directly above or below a shelf cell.
  std::vector<CellCoord> candidates;
  for (int y = 6; y < kHeight - 1; ++y)
    for (int x = 0; x < kWidth; ++x) {
      const CellCoord c{x, y};
      if (layout.at(c).type != CellType::Open) continue;
      const bool near_shelf = (layout.in_bounds({x, y - 1}) && layout.at({x, y - 1}).type == CellType::Blocked) ||
                              (layout.in_bounds({x, y + 1}) && layout.at({x, y + 1}).type == CellType::Blocked);
      if (near_shelf) candidates.push_back(c);
    }
  if (candidates.size() < kProducts)
    throw LayoutError(LayoutError::Kind::GenerationFailed, "too few product candidate cells");

  SplitMix64 rng(seed);
  for (int i = 0; i < kProducts; ++i) {
    const std::size_t j = i + rng.below(candidates.size() - i);
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
  }
  std::vector<CellCoord> chosen(candidates.begin(), candidates.begin() + kProducts);
  // Registry ids follow reading order, same as the parser's.
  std::sort(chosen.begin(), chosen.end(),
            [](CellCoord a, CellCoord b) { return a.y != b.y ? a.y > b.y : a.x < b.x; });
  for (const CellCoord c : chosen) layout.at(c).type = CellType::Product;

  // Assign entrance/exit/product ids in reading order.
  auto index_registry = [&layout](CellType type, std::vector<CellCoord>& registry) {
    registry.clear();
    for (int y = layout.height_cells - 1; y >= 0; --y)
      for (int x = 0; x < layout.width_cells; ++x) {
        const CellCoord c{x, y};
        if (layout.at(c).type != type) continue;
        layout.at(c).id = static_cast<std::int16_t>(registry.size());
        registry.push_back(c);
      }
  };
  index_registry(CellType::Product, layout.products);
  index_registry(CellType::Entrance, layout.entrances);
  index_registry(CellType::Exit, layout.exits);

  const ValidationReport report = validate_layout(layout);
  if (!report.ok())
    throw LayoutError(LayoutError::Kind::GenerationFailed,
                      "generated layout invalid: " + report.violations.front().message);
  return layout;
}

}  // namespace rushsim
