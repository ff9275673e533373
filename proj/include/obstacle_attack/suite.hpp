#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "obstacle_attack/scenario.hpp"
#include "obstacle_attack/sim.hpp"

namespace obstacle_attack {

enum class Condition { Benign, Adversarial };

const char* to_string(Condition condition) noexcept;

struct RunRecord {
  std::string scenario;
  std::size_t goal_index = 0;
  Cell goal;
  Condition condition = Condition::Benign;
  int repeat = 0;
  RunResult result;

  /// Time the robot took in this run's condition.
  double time() const noexcept;
};

struct GoalSummary {
  std::size_t goal_index = 0;
  Cell goal;
  double mean_benign_time = 0.0;
  double mean_adversarial_time = 0.0;
  double mean_delay_abs = 0.0;
  double mean_delay_pct = 0.0;
};

struct SkippedGoal {
  std::size_t goal_index = 0;
  Cell goal;
  std::string reason;
};

struct MetricsSummary {
  std::vector<GoalSummary> per_goal;
  std::vector<SkippedGoal> skipped;
  double overall_mean_delay_abs = 0.0;
  double overall_mean_delay_pct = 0.0;
  /// Share of adversarial runs that had an obstacle to place and placed it in
  /// time. Absent when no run had a placement.
  std::optional<double> success_rate;
  std::size_t adversarial_runs = 0;
  std::size_t attacked_runs = 0;
};

struct SuiteResult {
  std::vector<RunRecord> runs;  // ordered (goal, condition, repeat)
  MetricsSummary summary;
  /// One trace per solvable goal (adversarial condition), for rendering.
  std::vector<RunTrace> traces;
};

/// Runs `repeats` benign and `repeats` adversarial navigations per goal.
/// Goals run in parallel under OpenMP; output order does not depend on it.
SuiteResult run_suite(const Scenario& scenario);

/// Aggregates runs the same way run_suite does.
MetricsSummary summarize(const std::vector<RunRecord>& runs);

}  // namespace obstacle_attack
