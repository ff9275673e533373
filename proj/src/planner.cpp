#include "obstacle_attack/planner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <set>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

namespace {

// Path cost a + b*sqrt(2) kept as exact integer counts. Two such values are
// equal only if both counts match, so ordering never depends on rounding.
struct OctileCost {
  std::int64_t straight = 0;
  std::int64_t diagonal = 0;

  double value() const noexcept {
    return static_cast<double>(straight) + static_cast<double>(diagonal) * kSqrt2;
  }
  OctileCost operator+(OctileCost o) const noexcept {
    return {straight + o.straight, diagonal + o.diagonal};
  }
  friend bool operator==(OctileCost, OctileCost) = default;
};

int sign(std::int64_t v) noexcept { return (v > 0) - (v < 0); }

// Sign of a - b. a - b = p - q*sqrt(2) with p, q below.
int compare(OctileCost a, OctileCost b) noexcept {
  const std::int64_t p = a.straight - b.straight;
  const std::int64_t q = b.diagonal - a.diagonal;
  if (q == 0) return sign(p);
  if (p == 0) return -sign(q);
  if (p > 0 && q < 0) return 1;
  if (p < 0 && q > 0) return -1;
  const std::int64_t p2 = p * p;
  const std::int64_t q2 = 2 * q * q;
  return p > 0 ? (p2 > q2 ? 1 : -1) : (p2 > q2 ? -1 : 1);
}

OctileCost octile(Cell a, Cell b) noexcept {
  const std::int64_t dx = std::abs(a.col - b.col);
  const std::int64_t dy = std::abs(a.row - b.row);
  const std::int64_t lo = std::min(dx, dy);
  const std::int64_t hi = std::max(dx, dy);
  return {hi - lo, lo};
}

struct OpenEntry {
  OctileCost f;
  OctileCost h;
  OctileCost g;
  Cell cell;
};

// std::priority_queue is a max-heap; "a after b" means a has lower priority.
struct ExpandsLater {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const noexcept {
    if (const int c = compare(a.f, b.f); c != 0) return c > 0;
    if (const int c = compare(a.h, b.h); c != 0) return c > 0;
    if (a.cell.row != b.cell.row) return a.cell.row > b.cell.row;
    return a.cell.col > b.cell.col;
  }
};

constexpr std::array<Cell, 8> kMoves{{
    {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {1, -1}, {1, 1}, {-1, 1}, {-1, -1},
}};

void check_endpoint(const GridMap& map, Cell c, const char* what) {
  if (!map.in_bounds(c)) throw Error(Errc::BadEndpoint, std::string(what) + " " + to_string(c) + " is out of bounds");
  if (map.occupied(c)) throw Error(Errc::BadEndpoint, std::string(what) + " " + to_string(c) + " is occupied");
}

}  // namespace

Path make_path(std::vector<Cell> cells, double cell_size) {
  Path path;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const int dc = std::abs(cells[i].col - cells[i - 1].col);
    const int dr = std::abs(cells[i].row - cells[i - 1].row);
    if (dc + dr == 1) {
      ++path.straight_steps;
    } else if (dc == 1 && dr == 1) {
      ++path.diagonal_steps;
    } else {
      throw Error(Errc::BadValue, "cells " + to_string(cells[i - 1]) + " and " +
                                      to_string(cells[i]) + " are not neighbours");
    }
  }
  path.cells = std::move(cells);
  path.cost = static_cast<double>(path.straight_steps) +
              static_cast<double>(path.diagonal_steps) * kSqrt2;
  path.metric_length = path.cost * cell_size;
  return path;
}

double octile_distance(Cell a, Cell b) noexcept { return octile(a, b).value(); }

double euclidean_distance(Cell a, Cell b, double cell_size) noexcept {
  const double dx = a.col - b.col;
  const double dy = a.row - b.row;
  return cell_size * std::sqrt(dx * dx + dy * dy);
}

bool can_step(const GridMap& map, Cell from, Cell to) noexcept {
  const int dc = to.col - from.col;
  const int dr = to.row - from.row;
  if (std::abs(dc) > 1 || std::abs(dr) > 1 || (dc == 0 && dr == 0)) return false;
  if (map.occupied(to)) return false;
  if (dc != 0 && dr != 0) {
    return map.free({from.col + dc, from.row}) && map.free({from.col, from.row + dr});
  }
  return true;
}

bool is_valid_path(const GridMap& map, const Path& path, std::string* why) {
  auto fail = [why](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (path.cells.empty()) return fail("empty path");
  std::set<Cell> seen;
  for (std::size_t i = 0; i < path.cells.size(); ++i) {
    const Cell c = path.cells[i];
    if (map.occupied(c)) return fail("cell " + to_string(c) + " is blocked");
    if (!seen.insert(c).second) return fail("cell " + to_string(c) + " revisited");
    if (i > 0 && !can_step(map, path.cells[i - 1], c)) {
      return fail("illegal step " + to_string(path.cells[i - 1]) + " -> " + to_string(c));
    }
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    const bool diagonal = path.cells[i].col != path.cells[i - 1].col &&
                          path.cells[i].row != path.cells[i - 1].row;
    sum += diagonal ? kSqrt2 : 1.0;
  }
  if (std::abs(sum - path.cost) > 1e-9) return fail("cost does not match step sum");
  if (std::abs(path.metric_length - path.cost * map.cell_size()) > 1e-9) {
    return fail("metric length does not match cost");
  }
  return true;
}

Path astar(const GridMap& map, Cell start, Cell goal) {
  check_endpoint(map, start, "start");
  check_endpoint(map, goal, "goal");

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<OctileCost> g(map.size());
  std::vector<std::uint8_t> reached(map.size(), 0);
  std::vector<std::uint8_t> closed(map.size(), 0);
  std::vector<std::size_t> parent(map.size(), kNone);

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, ExpandsLater> open;
  const std::size_t start_index = map.index(start);
  reached[start_index] = 1;
  const OctileCost h0 = octile(start, goal);
  open.push({h0, h0, {}, start});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const std::size_t idx = map.index(top.cell);
    if (closed[idx] || !(top.g == g[idx])) continue;
    closed[idx] = 1;

    if (top.cell == goal) {
      std::vector<Cell> cells;
      for (std::size_t at = idx; at != kNone; at = parent[at]) cells.push_back(map.cell_at(at));
      std::reverse(cells.begin(), cells.end());
      return make_path(std::move(cells), map.cell_size());
    }

    for (const Cell move : kMoves) {
      const Cell next{top.cell.col + move.col, top.cell.row + move.row};
      if (!can_step(map, top.cell, next)) continue;
      const std::size_t nidx = map.index(next);
      if (closed[nidx]) continue;
      const OctileCost step = (move.col != 0 && move.row != 0) ? OctileCost{0, 1} : OctileCost{1, 0};
      const OctileCost tentative = top.g + step;
      if (reached[nidx] && compare(tentative, g[nidx]) >= 0) continue;
      reached[nidx] = 1;
      g[nidx] = tentative;
      parent[nidx] = idx;
      const OctileCost h = octile(next, goal);
      open.push({tentative + h, h, tentative, next});
    }
  }
  throw Error(Errc::NoPath, "goal " + to_string(goal) + " unreachable from " + to_string(start));
}

}  // namespace obstacle_attack
