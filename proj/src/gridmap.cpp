#include "obstacle_attack/gridmap.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

std::string to_string(Cell cell) {
  return std::to_string(cell.col) + "," + std::to_string(cell.row);
}

bool ObstaclePlacement::covers(Cell cell) const noexcept {
  const int h = half();
  return cell.col >= center.col - h && cell.col <= center.col + h &&
         cell.row >= center.row - h && cell.row <= center.row + h;
}

namespace {

void check_placement(const ObstaclePlacement& placement) {
  if (placement.side < 1 || placement.side % 2 == 0) {
    throw Error(Errc::BadValue,
                "obstacle side must be an odd integer >= 1, got " + std::to_string(placement.side));
  }
}

}  // namespace

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> occupied, double cell_size)
    : width_(width), height_(height), cell_size_(cell_size), occupied_(std::move(occupied)) {
  if (width_ < 2 || height_ < 2) {
    throw Error(Errc::EmptyMap, "map must be at least 2x2, got " + std::to_string(width_) + "x" +
                                    std::to_string(height_));
  }
  if (occupied_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
    throw Error(Errc::RaggedRows, "occupancy buffer does not match dimensions");
  }
  if (!(cell_size_ > 0.0)) {
    throw Error(Errc::BadValue, "cell_size must be positive");
  }
  for (auto& v : occupied_) v = v != 0 ? 1 : 0;
}

GridMap GridMap::with_cell_size(double cell_size) const {
  return GridMap(width_, height_, occupied_, cell_size);
}

std::size_t GridMap::occupied_count() const noexcept {
  return static_cast<std::size_t>(std::count(occupied_.begin(), occupied_.end(), 1));
}

GridMap parse_map(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::EmptyMap, "map text has no rows");

  std::vector<std::uint8_t> cells;
  int width = -1;
  int height = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++height;
    if (line.empty()) {
      throw Error(Errc::EmptyMap, "row " + std::to_string(height - 1) + " has zero width");
    }
    if (width < 0) {
      width = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != width) {
      throw Error(Errc::RaggedRows, "row " + std::to_string(height - 1) + " has " +
                                        std::to_string(line.size()) + " cells, expected " +
                                        std::to_string(width));
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (ch == '#') {
        cells.push_back(1);
      } else if (ch == '.') {
        cells.push_back(0);
      } else {
        throw Error(Errc::BadChar, "unexpected character code " +
                                       std::to_string(static_cast<unsigned char>(ch)) +
                                       " at row " + std::to_string(height - 1) + ", col " +
                                       std::to_string(i));
      }
    }
    pos = end + 1;
  }
  return GridMap(width, height, std::move(cells));
}

std::string serialize_map(const GridMap& map) {
  std::string out;
  out.reserve(static_cast<std::size_t>(map.width() + 1) * static_cast<std::size_t>(map.height()));
  for (int row = 0; row < map.height(); ++row) {
    for (int col = 0; col < map.width(); ++col) out.push_back(map.occupied({col, row}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

GridMap load_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open map file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_map(buffer.str());
}

std::vector<Cell> footprint_cells(const ObstaclePlacement& placement, const GridMap& map) {
  check_placement(placement);
  const int h = placement.half();
  std::vector<Cell> cells;
  for (int row = placement.center.row - h; row <= placement.center.row + h; ++row) {
    for (int col = placement.center.col - h; col <= placement.center.col + h; ++col) {
      if (map.in_bounds({col, row})) cells.push_back({col, row});
    }
  }
  return cells;
}

GridMap apply_obstacle(const GridMap& map, const ObstaclePlacement& placement) {
  const auto cells = footprint_cells(placement, map);
  if (cells.empty()) {
    throw Error(Errc::OutOfBounds,
                "obstacle at " + to_string(placement.center) + " lies outside the map");
  }
  std::vector<std::uint8_t> occupied = map.occupancy();
  for (const Cell c : cells) occupied[map.index(c)] = 1;
  return GridMap(map.width(), map.height(), std::move(occupied), map.cell_size());
}

}  // namespace obstacle_attack
