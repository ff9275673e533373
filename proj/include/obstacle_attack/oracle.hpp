#pragma once

// Test-only reference implementations. Nothing in the main library or the CLI
// links against these.

#include "obstacle_attack/attack.hpp"
#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/planner.hpp"

namespace obstacle_attack::oracle {

/// Heuristic-free Dijkstra over the same move model as astar, written without
/// sharing astar's neighbour or cost code. Same error contract as astar.
Path dijkstra_oracle(const GridMap& map, Cell start, Cell goal);

/// Attack loop re-implemented on top of dijkstra_oracle with its own footprint
/// and overlay code. The baseline is taken as given, because equally short
/// baselines can visit different cells and the candidate set is defined by
/// the visited cells. Throws Error{NoBaseline} if the supplied baseline is not
/// optimal according to dijkstra_oracle.
AttackPlan attack_oracle(const GridMap& map, const Path& baseline, int side);

/// Convenience form: baseline from dijkstra_oracle.
AttackPlan attack_oracle(const GridMap& map, Cell start, Cell goal, int side);

}  // namespace obstacle_attack::oracle
