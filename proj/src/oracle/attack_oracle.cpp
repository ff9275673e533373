#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "obstacle_attack/error.hpp"
#include "obstacle_attack/oracle.hpp"

namespace obstacle_attack::oracle {

namespace {

// Chebyshev-ball membership, written independently of ObstaclePlacement::covers.
bool within(Cell center, int side, Cell c) {
  return std::max(std::abs(center.col - c.col), std::abs(center.row - c.row)) <= side / 2;
}

GridMap obstructed(const GridMap& map, Cell center, int side) {
  std::vector<std::uint8_t> cells = map.occupancy();
  for (int row = 0; row < map.height(); ++row) {
    for (int col = 0; col < map.width(); ++col) {
      if (within(center, side, {col, row})) cells[static_cast<std::size_t>(row * map.width() + col)] = 1;
    }
  }
  return GridMap(map.width(), map.height(), std::move(cells), map.cell_size());
}

}  // namespace

AttackPlan attack_oracle(const GridMap& map, const Path& baseline, int side) {
  if (baseline.cells.empty()) throw Error(Errc::NoBaseline, "oracle: empty baseline");
  const Cell start = baseline.cells.front();
  const Cell goal = baseline.cells.back();
  const Path reference = dijkstra_oracle(map, start, goal);
  if (std::abs(reference.cost - baseline.cost) > kCostTolerance) {
    throw Error(Errc::NoBaseline, "oracle: supplied baseline is not optimal");
  }

  AttackPlan plan;
  plan.baseline = baseline;
  double longest = baseline.cost;
  for (std::size_t i = 0; i < baseline.cells.size(); ++i) {
    CandidateEval eval;
    eval.index = i;
    eval.placement = ObstaclePlacement{baseline.cells[i], side};
    const Cell center = baseline.cells[i];
    if (within(center, side, start) || within(center, side, goal)) {
      eval.outcome = Outcome::Infeasible;
      plan.ledger.push_back(eval);
      continue;
    }
    const GridMap attacked = obstructed(map, center, side);
    try {
      Path detour = dijkstra_oracle(attacked, start, goal);
      eval.outcome = Outcome::Evaluated;
      eval.cost = detour.cost;
      if (detour.cost > longest + kCostTolerance) {
        longest = detour.cost;
        plan.best = eval.placement;
        plan.best_index = i;
        plan.attacked_path = std::move(detour);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NoPath) throw;
      eval.outcome = Outcome::Blocking;
    }
    plan.ledger.push_back(eval);
  }
  plan.gain = plan.best ? longest - baseline.cost : 0.0;
  return plan;
}

AttackPlan attack_oracle(const GridMap& map, Cell start, Cell goal, int side) {
  Path baseline;
  try {
    baseline = dijkstra_oracle(map, start, goal);
  } catch (const Error& e) {
    throw Error(Errc::NoBaseline, e.what());
  }
  return attack_oracle(map, baseline, side);
}

}  // namespace obstacle_attack::oracle
