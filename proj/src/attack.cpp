#include "obstacle_attack/attack.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Evaluated: return "evaluated";
    case Outcome::Blocking: return "blocking";
    case Outcome::Infeasible: return "infeasible";
  }
  return "unknown";
}

std::size_t AttackPlan::count(Outcome outcome) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      ledger.begin(), ledger.end(), [outcome](const CandidateEval& e) { return e.outcome == outcome; }));
}

std::vector<IndexedPlacement> enumerate_candidates(const Path& baseline, int side) {
  std::vector<IndexedPlacement> out;
  if (baseline.cells.empty()) return out;
  const Cell start = baseline.cells.front();
  const Cell goal = baseline.cells.back();
  for (std::size_t i = 0; i < baseline.cells.size(); ++i) {
    const ObstaclePlacement placement{baseline.cells[i], side};
    if (placement.covers(start) || placement.covers(goal)) continue;
    out.push_back({i, placement});
  }
  return out;
}

namespace {

Path plan_baseline(const GridMap& map, Cell start, Cell goal) {
  try {
    return astar(map, start, goal);
  } catch (const Error& e) {
    if (e.code() == Errc::NoPath || e.code() == Errc::BadEndpoint) {
      throw Error(Errc::NoBaseline, e.what());
    }
    throw;
  }
}

// Ledger skeleton: every baseline cell starts Infeasible; feasible ones are
// overwritten by the evaluation loop.
std::vector<CandidateEval> initial_ledger(const Path& baseline, int side) {
  std::vector<CandidateEval> ledger(baseline.cells.size());
  for (std::size_t i = 0; i < baseline.cells.size(); ++i) {
    ledger[i].index = i;
    ledger[i].placement = ObstaclePlacement{baseline.cells[i], side};
  }
  return ledger;
}

struct Evaluation {
  Outcome outcome = Outcome::Blocking;
  std::optional<Path> path;
};

Evaluation evaluate(const GridMap& map, Cell start, Cell goal, const ObstaclePlacement& placement) {
  const GridMap attacked = apply_obstacle(map, placement);
  try {
    return {Outcome::Evaluated, astar(attacked, start, goal)};
  } catch (const Error& e) {
    if (e.code() != Errc::NoPath) throw;
    return {Outcome::Blocking, std::nullopt};
  }
}

}  // namespace

AttackPlan brute_force_attack_serial(const GridMap& map, Cell start, Cell goal, int side) {
  AttackPlan plan;
  plan.baseline = plan_baseline(map, start, goal);
  plan.ledger = initial_ledger(plan.baseline, side);

  double longest = plan.baseline.cost;
  for (const auto& [index, placement] : enumerate_candidates(plan.baseline, side)) {
    Evaluation eval = evaluate(map, start, goal, placement);
    CandidateEval& entry = plan.ledger[index];
    entry.outcome = eval.outcome;
    if (eval.outcome != Outcome::Evaluated) continue;
    entry.cost = eval.path->cost;
    if (eval.path->cost > longest + kCostTolerance) {
      longest = eval.path->cost;
      plan.best = placement;
      plan.best_index = index;
      plan.attacked_path = std::move(eval.path);
    }
  }
  plan.gain = plan.best ? longest - plan.baseline.cost : 0.0;
  return plan;
}

AttackPlan brute_force_attack(const GridMap& map, Cell start, Cell goal, int side) {
  AttackPlan plan;
  plan.baseline = plan_baseline(map, start, goal);
  plan.ledger = initial_ledger(plan.baseline, side);

  const std::vector<IndexedPlacement> candidates = enumerate_candidates(plan.baseline, side);
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<Evaluation> evals(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      evals[i] = evaluate(map, start, goal, candidates[i].placement);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  // Reduction in path order so ties resolve exactly as in the serial loop.
  double longest = plan.baseline.cost;
  std::optional<std::size_t> winner;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    CandidateEval& entry = plan.ledger[candidates[k].index];
    entry.outcome = evals[k].outcome;
    if (evals[k].outcome != Outcome::Evaluated) continue;
    entry.cost = evals[k].path->cost;
    if (entry.cost > longest + kCostTolerance) {
      longest = entry.cost;
      winner = k;
    }
  }
  if (winner) {
    plan.best = candidates[*winner].placement;
    plan.best_index = candidates[*winner].index;
    plan.attacked_path = std::move(evals[*winner].path);
    plan.gain = longest - plan.baseline.cost;
  }
  return plan;
}

}  // namespace obstacle_attack
