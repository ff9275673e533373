#pragma once

#include <vector>

#include "obstacle_attack/gridmap.hpp"

namespace obstacle_attack {

inline constexpr double kSqrt2 = 1.41421356237309504880;

struct Path {
  std::vector<Cell> cells;
  /// Step cost: 1 per orthogonal move, sqrt(2) per diagonal move.
  double cost = 0.0;
  double metric_length = 0.0;

  std::size_t straight_steps = 0;
  std::size_t diagonal_steps = 0;
};

/// Builds a Path from an 8-connected cell sequence. The cost is computed from
/// the step counts, so two paths with the same counts have bit-identical costs.
/// Throws Error{BadValue} if consecutive cells are not 8-neighbours.
Path make_path(std::vector<Cell> cells, double cell_size);

/// Lower bound on path cost between two cells on an 8-connected grid.
double octile_distance(Cell a, Cell b) noexcept;

double euclidean_distance(Cell a, Cell b, double cell_size) noexcept;

/// Legal single move: `to` is a free 8-neighbour of `from` and, for diagonal
/// moves, both orthogonally adjacent cells are free (no corner cutting).
bool can_step(const GridMap& map, Cell from, Cell to) noexcept;

/// Checks adjacency, freedom, distinctness and cost bookkeeping. On failure
/// writes a reason into `why` when provided.
bool is_valid_path(const GridMap& map, const Path& path, std::string* why = nullptr);

/// Optimal 8-connected A* with octile heuristic.
///
/// Open-list order is (f, h, row, col), all compared exactly, so the returned
/// cell sequence is a deterministic function of the inputs. start == goal
/// yields a single-cell path of cost 0.
///
/// Throws Error{BadEndpoint} when start or goal is occupied or out of bounds
/// and Error{NoPath} when the goal is unreachable.
Path astar(const GridMap& map, Cell start, Cell goal);

}  // namespace obstacle_attack
