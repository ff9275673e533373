#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/planner.hpp"

namespace obstacle_attack {

/// Slack used whenever two path costs are compared.
inline constexpr double kCostTolerance = 1e-9;

enum class Outcome { Evaluated, Blocking, Infeasible };

const char* to_string(Outcome outcome) noexcept;

/// One iteration of the attack loop: the obstacle centred on baseline cell
/// `index` and what replanning around it produced.
struct CandidateEval {
  std::size_t index = 0;
  ObstaclePlacement placement;
  Outcome outcome = Outcome::Infeasible;
  double cost = 0.0;  // replanned step cost, meaningful only when Evaluated

  friend bool operator==(const CandidateEval&, const CandidateEval&) = default;
};

struct AttackPlan {
  Path baseline;
  std::optional<ObstaclePlacement> best;
  std::optional<std::size_t> best_index;
  std::optional<Path> attacked_path;
  std::vector<CandidateEval> ledger;  // one entry per baseline cell, path order
  double gain = 0.0;                  // attacked cost - baseline cost, 0 without best

  std::size_t count(Outcome outcome) const noexcept;
};

struct IndexedPlacement {
  std::size_t index = 0;
  ObstaclePlacement placement;
};

/// Placements centred on each baseline cell whose footprint misses both the
/// start and the goal, in path order.
std::vector<IndexedPlacement> enumerate_candidates(const Path& baseline, int side);

/// Brute-force obstacle attack. Every candidate on the baseline path is
/// replanned around; the earliest candidate with the strictly largest
/// replanned cost wins. Candidates that disconnect the goal are recorded as
/// Blocking and never chosen.
///
/// Candidate evaluations run in parallel when built with OpenMP; the result is
/// identical to brute_force_attack_serial.
///
/// Throws Error{NoBaseline} if the unobstructed map has no path.
AttackPlan brute_force_attack(const GridMap& map, Cell start, Cell goal, int side);

/// Sequential reference implementation, one replan per loop iteration with
/// the running maximum updated in place.
AttackPlan brute_force_attack_serial(const GridMap& map, Cell start, Cell goal, int side);

}  // namespace obstacle_attack
