#include "obstacle_attack/suite.hpp"

#include <exception>
#include <map>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

const char* to_string(Condition condition) noexcept {
  return condition == Condition::Benign ? "benign" : "adversarial";
}

double RunRecord::time() const noexcept {
  if (condition == Condition::Adversarial && result.adversarial_time) return *result.adversarial_time;
  return result.benign_time;
}

namespace {

struct GoalOutcome {
  std::vector<RunRecord> runs;
  std::optional<RunTrace> trace;
  std::optional<SkippedGoal> skipped;
  std::exception_ptr error;
};

GoalOutcome run_goal(const Scenario& scenario, std::size_t goal_index) {
  GoalOutcome out;
  const Cell goal = scenario.goals[goal_index];
  try {
    for (const Condition condition : {Condition::Benign, Condition::Adversarial}) {
      const SimConfig config = scenario.sim_config(condition == Condition::Adversarial);
      for (int repeat = 0; repeat < scenario.repeats; ++repeat) {
        RunTrace trace = simulate_trace(scenario.map, scenario.start, goal, config, scenario.obstacle_side);
        out.runs.push_back({scenario.name, goal_index, goal, condition, repeat, trace.result});
        if (condition == Condition::Adversarial && !out.trace) out.trace = std::move(trace);
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NoBaseline) throw;
    out.runs.clear();
    out.trace.reset();
    out.skipped = SkippedGoal{goal_index, goal, e.what()};
  }
  return out;
}

}  // namespace

MetricsSummary summarize(const std::vector<RunRecord>& runs) {
  struct Accumulator {
    Cell goal;
    double benign_sum = 0.0;
    std::size_t benign_n = 0;
    double adversarial_sum = 0.0;
    double delay_abs_sum = 0.0;
    double delay_pct_sum = 0.0;
    std::size_t adversarial_n = 0;
  };
  std::map<std::size_t, Accumulator> per_goal;
  MetricsSummary summary;
  double abs_sum = 0.0;
  double pct_sum = 0.0;
  std::size_t successes = 0;

  for (const RunRecord& run : runs) {
    Accumulator& acc = per_goal[run.goal_index];
    acc.goal = run.goal;
    if (run.condition == Condition::Benign) {
      acc.benign_sum += run.result.benign_time;
      ++acc.benign_n;
      continue;
    }
    const double delay_abs = run.result.delay_abs.value_or(0.0);
    const double delay_pct = run.result.delay_pct.value_or(0.0);
    acc.adversarial_sum += run.time();
    acc.delay_abs_sum += delay_abs;
    acc.delay_pct_sum += delay_pct;
    ++acc.adversarial_n;
    abs_sum += delay_abs;
    pct_sum += delay_pct;
    ++summary.adversarial_runs;
    if (run.result.attack_success) {
      ++summary.attacked_runs;
      if (*run.result.attack_success) ++successes;
    }
  }

  for (const auto& [index, acc] : per_goal) {
    GoalSummary goal;
    goal.goal_index = index;
    goal.goal = acc.goal;
    if (acc.benign_n > 0) goal.mean_benign_time = acc.benign_sum / static_cast<double>(acc.benign_n);
    if (acc.adversarial_n > 0) {
      const auto n = static_cast<double>(acc.adversarial_n);
      goal.mean_adversarial_time = acc.adversarial_sum / n;
      goal.mean_delay_abs = acc.delay_abs_sum / n;
      goal.mean_delay_pct = acc.delay_pct_sum / n;
    }
    summary.per_goal.push_back(goal);
  }
  if (summary.adversarial_runs > 0) {
    const auto n = static_cast<double>(summary.adversarial_runs);
    summary.overall_mean_delay_abs = abs_sum / n;
    summary.overall_mean_delay_pct = pct_sum / n;
  }
  if (summary.attacked_runs > 0) {
    summary.success_rate =
        100.0 * static_cast<double>(successes) / static_cast<double>(summary.attacked_runs);
  }
  return summary;
}

SuiteResult run_suite(const Scenario& scenario) {
  const auto goal_count = static_cast<std::ptrdiff_t>(scenario.goals.size());
  std::vector<GoalOutcome> outcomes(scenario.goals.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t g = 0; g < goal_count; ++g) {
    const auto i = static_cast<std::size_t>(g);
    try {
      outcomes[i] = run_goal(scenario, i);
    } catch (...) {
      outcomes[i].error = std::current_exception();
    }
  }

  SuiteResult result;
  std::vector<SkippedGoal> skipped;
  for (GoalOutcome& outcome : outcomes) {
    if (outcome.error) std::rethrow_exception(outcome.error);
    if (outcome.skipped) skipped.push_back(*outcome.skipped);
    result.runs.insert(result.runs.end(), outcome.runs.begin(), outcome.runs.end());
    if (outcome.trace) result.traces.push_back(std::move(*outcome.trace));
  }
  result.summary = summarize(result.runs);
  result.summary.skipped = std::move(skipped);
  return result;
}

}  // namespace obstacle_attack
