#include <cmath>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "obstacle_attack/error.hpp"
#include "obstacle_attack/oracle.hpp"

namespace obstacle_attack::oracle {

namespace {

bool blocked(const GridMap& map, int col, int row) {
  if (col < 0 || row < 0 || col >= map.width() || row >= map.height()) return true;
  return map.occupancy()[static_cast<std::size_t>(row * map.width() + col)] != 0;
}

}  // namespace

Path dijkstra_oracle(const GridMap& map, Cell start, Cell goal) {
  if (blocked(map, start.col, start.row) || blocked(map, goal.col, goal.row)) {
    throw Error(Errc::BadEndpoint, "oracle endpoint blocked or out of bounds");
  }
  const int w = map.width();
  const int n = w * map.height();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(n), inf);
  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  std::set<std::pair<double, int>> frontier;

  const int s = start.row * w + start.col;
  const int t = goal.row * w + goal.col;
  dist[static_cast<std::size_t>(s)] = 0.0;
  frontier.insert({0.0, s});

  while (!frontier.empty()) {
    const auto [d, u] = *frontier.begin();
    frontier.erase(frontier.begin());
    if (u == t) break;
    const int ux = u % w;
    const int uy = u / w;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int vx = ux + dx;
        const int vy = uy + dy;
        if (blocked(map, vx, vy)) continue;
        double w_edge = 1.0;
        if (dx != 0 && dy != 0) {
          if (blocked(map, ux + dx, uy) || blocked(map, ux, uy + dy)) continue;
          w_edge = std::sqrt(2.0);
        }
        const int v = vy * w + vx;
        const double nd = d + w_edge;
        if (nd < dist[static_cast<std::size_t>(v)] - 1e-12) {
          frontier.erase({dist[static_cast<std::size_t>(v)], v});
          dist[static_cast<std::size_t>(v)] = nd;
          prev[static_cast<std::size_t>(v)] = u;
          frontier.insert({nd, v});
        }
      }
    }
  }
  if (dist[static_cast<std::size_t>(t)] == inf) {
    throw Error(Errc::NoPath, "oracle: goal unreachable");
  }
  std::vector<Cell> reversed;
  for (int at = t; at != -1; at = prev[static_cast<std::size_t>(at)]) {
    reversed.push_back({at % w, at / w});
  }
  return make_path(std::vector<Cell>(reversed.rbegin(), reversed.rend()), map.cell_size());
}

}  // namespace obstacle_attack::oracle
