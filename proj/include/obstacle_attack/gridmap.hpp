#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace obstacle_attack {

/// Grid coordinate. `col` grows rightward, `row` grows downward (row 0 is the
/// first line of a map file).
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell cell);

/// Square obstacle footprint of odd side length centred on a cell.
struct ObstaclePlacement {
  Cell center;
  int side = 1;

  int half() const noexcept { return side / 2; }
  /// True when `cell` lies inside the (unclipped) square.
  bool covers(Cell cell) const noexcept;

  friend bool operator==(const ObstaclePlacement&, const ObstaclePlacement&) = default;
};

/// Immutable binary occupancy grid with a metric cell size.
class GridMap {
 public:
  GridMap(int width, int height, std::vector<std::uint8_t> occupied, double cell_size = 1.0);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  double cell_size() const noexcept { return cell_size_; }

  bool in_bounds(Cell c) const noexcept {
    return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
  }
  /// Out-of-bounds cells count as occupied.
  bool occupied(Cell c) const noexcept {
    return !in_bounds(c) || occupied_[index(c)] != 0;
  }
  bool free(Cell c) const noexcept { return !occupied(c); }

  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.col);
  }
  Cell cell_at(std::size_t index) const noexcept {
    return Cell{static_cast<int>(index % static_cast<std::size_t>(width_)),
                static_cast<int>(index / static_cast<std::size_t>(width_))};
  }
  std::size_t size() const noexcept { return occupied_.size(); }
  /// Row-major occupancy flags (1 = occupied).
  const std::vector<std::uint8_t>& occupancy() const noexcept { return occupied_; }

  GridMap with_cell_size(double cell_size) const;
  std::size_t occupied_count() const noexcept;

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int width_;
  int height_;
  double cell_size_;
  std::vector<std::uint8_t> occupied_;
};

/// Parses the ASCII map format: rows of '#' (occupied) and '.' (free)
/// separated by '\n', final newline optional.
GridMap parse_map(std::string_view text);

/// Inverse of parse_map. Always emits a final newline.
std::string serialize_map(const GridMap& map);

/// Reads and parses a map file; throws Error{IoError} if unreadable.
GridMap load_map(const std::string& path);

/// In-bounds cells of the footprint, row-major order.
std::vector<Cell> footprint_cells(const ObstaclePlacement& placement, const GridMap& map);

/// Returns a copy of `map` with every in-bounds footprint cell occupied.
GridMap apply_obstacle(const GridMap& map, const ObstaclePlacement& placement);

}  // namespace obstacle_attack
