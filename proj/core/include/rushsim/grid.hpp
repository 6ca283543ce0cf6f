#ifndef RUSHSIM_GRID_HPP
#define RUSHSIM_GRID_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rushsim {

/// Grid coordinate. Origin (0,0) is the bottom-left of the store; x grows
/// rightward, y grows upward.
struct CellCoord {
  int x = 0;
  int y = 0;
  auto operator<=>(const CellCoord&) const = default;
};

enum class CellType : std::uint8_t { Open, Blocked, Product, Checkout, Entrance, Exit };
enum class CheckoutSlot : std::uint8_t { Register, Queue };

/// What one grid cell is. Everything except Blocked is traversable.
struct CellKind {
  CellType type = CellType::Open;
  std::int16_t id = -1;  // product/lane/entrance/exit id, -1 when n/a
  CheckoutSlot slot = CheckoutSlot::Register;
};

struct CheckoutLane {
  int lane_id = -1;
  CellCoord register_cell;
  CellCoord queue_cell;
};

/// Cell offsets whose center-to-center distance is within max_distance_feet.
/// Always contains (0,0) and is symmetric under negation and axis reflection.
struct NeighborhoodMask {
  double max_distance_feet = 0.0;
  std::vector<std::pair<int, int>> offsets;
};

/// The discretized store. Immutable once built; safe to share across
/// concurrently executing runs.
struct StoreLayout {
  int width_cells = 0;
  int height_cells = 0;
  double cell_size_feet = 5.0;
  std::vector<CellKind> cells;  // row-major, index = y * width_cells + x

  std::vector<CellCoord> products;
  std::vector<CheckoutLane> checkouts;
  std::vector<CellCoord> entrances;
  std::vector<CellCoord> exits;

  bool in_bounds(CellCoord c) const {
    return c.x >= 0 && c.x < width_cells && c.y >= 0 && c.y < height_cells;
  }
  const CellKind& at(CellCoord c) const { return cells[static_cast<std::size_t>(c.y) * width_cells + c.x]; }
  CellKind& at(CellCoord c) { return cells[static_cast<std::size_t>(c.y) * width_cells + c.x]; }
  bool traversable(CellCoord c) const { return in_bounds(c) && at(c).type != CellType::Blocked; }
  int cell_index(CellCoord c) const { return c.y * width_cells + c.x; }

  /// Blank all-open layout (tests and the generator build on this).
  static StoreLayout open(int width, int height, double cell_feet = 5.0);
};

struct LayoutError : std::runtime_error {
  enum class Kind { MalformedGrid, RegistryMismatch, UnreachableCell, GenerationFailed };
  LayoutError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

struct Violation {
  enum class Kind { RegistryMismatch, UnreachableCell, BadDimensions };
  Kind kind;
  CellCoord where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checkout lane glyphs, indexed by lane id, as used by the layout format.
inline constexpr std::string_view kLaneGlyphs = "0123456789abcdefghijk";

/// Euclidean center-to-center distance in feet.
double center_distance(CellCoord a, CellCoord b, double cell_size_feet);

/// All offsets within max_distance_feet (inclusive) of the center cell.
/// With 5' cells this yields 5/9/13/21 offsets at 6'/8'/10'/12'.
NeighborhoodMask vulnerable_neighborhood(double max_distance_feet, double cell_size_feet);

/// Parses the layout text format: header `cols rows cell_feet`, then `rows`
/// glyph lines, top store row (y = rows-1) first. Glyphs: '.' open,
/// '#' blocked, 'P' product, 'E' entrance, 'X' exit, '0'-'9'/'a'-'k'
/// checkout lane (first occurrence in reading order is the register, the
/// second the queue).
StoreLayout parse_layout(std::string_view text);

/// Seed of the canonical default layout shipped with the artifact.
inline constexpr std::uint64_t kDefaultLayoutSeed = 42;

/// Builds an 80x60 store: front wall with 3 entrances and 3 exits, 21
/// checkout lanes behind it, shelf blocks in the interior and 34 product
/// cells sampled next to the shelves. Deterministic per seed and always
/// validates.
StoreLayout generate_default_layout(std::uint64_t seed = kDefaultLayoutSeed);

/// Checks every StoreLayout invariant; violations are data, not errors.
ValidationReport validate_layout(const StoreLayout& layout);

/// 4-connected flood fill from all entrances; true per cell index.
std::vector<char> reachable_from_entrances(const StoreLayout& layout);

}  // namespace rushsim

#endif
