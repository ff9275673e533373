#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "obstacle_attack/attack.hpp"
#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/planner.hpp"

namespace obstacle_attack {

struct SimConfig {
  double speed = 1.0;  // m/s
  bool attack_enabled = true;
  double eval_time_per_candidate = 0.05;  // s per adversarial replan
  double attack_start_delay = 0.0;        // s after baseline planning

  void validate() const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Position {
  Point point;                  // metres, cell centres at (col+0.5, row+0.5)*cell_size
  std::size_t passed_index = 0; // last path index whose centre has been reached
};

/// Kinematic follower: constant speed along the polyline of cell centres,
/// resting at the goal once the path is exhausted.
Position position_at(const Path& path, double cell_size, double speed, double t);

/// Distance travelled (in metres) when reaching each path cell's centre.
std::vector<double> arrival_distances(const Path& path, double cell_size);

/// Time at which the obstacle appears, measured from motion start. Each
/// Evaluated or Blocking ledger entry costs one replan; Infeasible ones are
/// never planned.
double spawn_time_model(const AttackPlan& plan, const SimConfig& config);

struct RunResult {
  Cell start;
  Cell goal;
  double euclidean = 0.0;
  double benign_time = 0.0;
  std::optional<double> adversarial_time;
  std::optional<double> spawn_time;
  std::optional<ObstaclePlacement> obstacle;
  std::optional<bool> attack_success;
  std::optional<double> delay_abs;
  std::optional<double> delay_pct;
};

/// Everything simulate() derived on the way to its RunResult.
struct RunTrace {
  RunResult result;
  Path baseline;
  std::optional<AttackPlan> plan;
  std::optional<double> pass_time;       // robot reaches the footprint
  std::optional<std::size_t> replan_from;  // baseline index the robot replanned from
  std::optional<Path> replanned;
  std::vector<Cell> route;               // cells actually visited, in order
};

/// One navigation run. With the attack enabled, the obstacle search runs
/// concurrently with motion on a modelled clock; if the obstacle spawns before
/// the robot reaches its footprint the robot replans from its next cell.
///
/// Throws Error{NoBaseline} if the goal is unreachable and Error{ReplanFailed}
/// if the obstructed map cannot be solved from the replan cell.
RunTrace simulate_trace(const GridMap& map, Cell start, Cell goal, const SimConfig& config,
                        int side);

RunResult simulate(const GridMap& map, Cell start, Cell goal, const SimConfig& config, int side);

}  // namespace obstacle_attack
