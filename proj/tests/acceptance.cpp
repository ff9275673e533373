// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "obstacle_attack/attack.hpp"
#include "obstacle_attack/error.hpp"
#include "obstacle_attack/oracle.hpp"
#include "obstacle_attack/report.hpp"
#include "obstacle_attack/scenario.hpp"
#include "obstacle_attack/suite.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace obstacle_attack;
using namespace obstacle_attack::testing;

namespace {

const std::vector<std::string> kScenarioNames{"warehouse", "tunnel", "turn", "twall", "branch", "corridor"};

// Tolerances and thresholds.
constexpr int kPlannerMaps = 500;
constexpr int kPlannerMaxDim = 12;
constexpr double kPlannerBudgetS = 10.0;
constexpr int kAttackMaps = 50;
constexpr int kAttackMaxDim = 16;
constexpr double kAttackBudgetS = 30.0;
constexpr double kTunnelMinPct = 50.0;
constexpr double kTurnMaxPct = 5.0;
constexpr double kWarehouseMinPct = 20.0;
constexpr double kWarehouseMaxPct = 60.0;
constexpr std::size_t kWarehouseMinGoals = 20;
constexpr double kWarehouseBudgetS = 60.0;
constexpr double kDefaultRaceMinSuccess = 85.0;
constexpr double kSlowRaceMaxSuccess = 50.0;
constexpr double kMetricTolerance = 1e-6;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Scenario scenario(const std::string& name) {
  return load_scenario(data_path("scenarios/" + name + ".scn"));
}

std::optional<double> optimal_cost(const GridMap& map, Cell s, Cell g, bool use_oracle) {
  try {
    return use_oracle ? oracle::dijkstra_oracle(map, s, g).cost : astar(map, s, g).cost;
  } catch (const Error& e) {
    if (e.code() != Errc::NoPath) throw;
    return std::nullopt;
  }
}

Verdict planner_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> dim(2, kPlannerMaxDim);
  std::uniform_real_distribution<double> density(0.0, 0.45);
  int solved = 0;
  int maps = 0;
  while (maps < kPlannerMaps) {
    const GridMap map = random_map(rng, dim(rng), dim(rng), density(rng));
    if (map.occupied_count() == map.size()) continue;
    ++maps;
    const Cell s = random_free_cell(rng, map);
    const Cell g = random_free_cell(rng, map);
    const auto a = optimal_cost(map, s, g, false);
    const auto o = optimal_cost(map, s, g, true);
    if (a.has_value() != o.has_value()) return {false, "NoPath verdicts differ on map " + std::to_string(maps)};
    if (a && *a != *o) return {false, fmt("cost mismatch astar=%.12f oracle=%.12f", *a, *o)};
    solved += a.has_value();
  }
  const double elapsed = seconds_since(t0);
  return {elapsed < kPlannerBudgetS,
          std::to_string(maps) + " maps, " + std::to_string(solved) + " solvable, " + fmt("%.2f s", elapsed)};
}

Verdict attack_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(7070);
  std::uniform_int_distribution<int> dim(4, kAttackMaxDim);
  std::uniform_int_distribution<int> side_pick(0, 1);
  int compared = 0;
  int with_best = 0;
  while (compared < kAttackMaps) {
    const GridMap map = random_map(rng, dim(rng), dim(rng), 0.2);
    if (map.occupied_count() == map.size()) continue;
    const Cell s = random_free_cell(rng, map);
    const Cell g = random_free_cell(rng, map);
    const int side = 2 * side_pick(rng) + 1;
    AttackPlan fast;
    try {
      fast = brute_force_attack(map, s, g, side);
    } catch (const Error& e) {
      if (e.code() != Errc::NoBaseline) throw;
      continue;  // no baseline: not a comparison
    }
    const AttackPlan slow = oracle::attack_oracle(map, fast.baseline, side);
    ++compared;
    with_best += fast.best.has_value();
    if (fast.best != slow.best || fast.gain != slow.gain) {
      return {false, "disagreement on map " + std::to_string(compared) + ":\n" + serialize_map(map)};
    }
  }
  const double elapsed = seconds_since(t0);
  return {elapsed < kAttackBudgetS && with_best > 0,
          std::to_string(compared) + " maps (" + std::to_string(with_best) + " with a placement), " +
              fmt("%.2f s", elapsed)};
}

Verdict non_blocking_guarantee() {
  std::size_t placements = 0;
  for (const std::string& name : kScenarioNames) {
    const Scenario s = scenario(name);
    SuiteResult result;
    try {
      result = run_suite(s);
    } catch (const Error& e) {
      return {false, name + ": " + e.what()};
    }
    for (const RunRecord& run : result.runs) {
      if (!run.result.obstacle) continue;
      ++placements;
      try {
        astar(apply_obstacle(s.map, *run.result.obstacle), s.start, run.goal);
      } catch (const Error& e) {
        return {false, name + ": chosen obstacle blocks the goal"};
      }
    }
  }
  return {placements > 0, std::to_string(placements) + " placements, 0 ReplanFailed"};
}

double instant_attack_pct(const std::string& name) {
  Scenario s = scenario(name);
  s.eval_time_per_candidate = 0.0;
  s.attack_start_delay = 0.0;
  return run_suite(s).summary.overall_mean_delay_pct;
}

Verdict constrained_ordering() {
  const double tunnel = instant_attack_pct("tunnel");
  const double twall = instant_attack_pct("twall");
  const double turn = instant_attack_pct("turn");
  const bool pass = tunnel > twall && twall > turn && tunnel >= kTunnelMinPct && turn <= kTurnMaxPct;
  return {pass, fmt("tunnel=%.2f%% t-wall=%.2f%% turn=%.2f%%", tunnel, twall, turn)};
}

Verdict warehouse_delay_band() {
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario s = scenario("warehouse");
  const SuiteResult result = run_suite(s);
  const double elapsed = seconds_since(t0);
  const double pct = result.summary.overall_mean_delay_pct;
  const std::size_t goals = result.summary.per_goal.size();
  const bool pass = goals >= kWarehouseMinGoals && pct >= kWarehouseMinPct && pct <= kWarehouseMaxPct &&
                    elapsed < kWarehouseBudgetS;
  return {pass, std::to_string(goals) + " goals, " + fmt("mean delay %.2f%%, %.2f s", pct, elapsed)};
}

Verdict success_rate_race() {
  Scenario s = scenario("warehouse");
  if (s.eval_time_per_candidate != kDefaultEvalTimePerCandidate) {
    return {false, "warehouse scenario does not use the default per-candidate time"};
  }
  const SuiteResult fast = run_suite(s);
  if (!fast.summary.success_rate) return {false, "no attacked runs"};

  double mean_benign = 0.0;
  for (const GoalSummary& g : fast.summary.per_goal) mean_benign += g.mean_benign_time;
  mean_benign /= static_cast<double>(fast.summary.per_goal.size());
  // Every attack evaluates at least one candidate, so each spawn lands after
  // the mean traversal time.
  s.eval_time_per_candidate = mean_benign;
  const SuiteResult slow = run_suite(s);
  const double slow_rate = slow.summary.success_rate.value_or(0.0);
  const bool pass = *fast.summary.success_rate >= kDefaultRaceMinSuccess && slow_rate < kSlowRaceMaxSuccess;
  return {pass, fmt("default %.2f%%, per-candidate %.2f s -> %.2f%%", *fast.summary.success_rate, mean_benign,
                    slow_rate)};
}

Verdict metric_identities() {
  const fs::path dir = fs::temp_directory_path() / "obstacle_attack_acceptance";
  fs::create_directories(dir);
  std::vector<std::vector<RunRecord>> groups;
  std::map<std::string, MetricsSummary> summaries;
  for (const std::string& name : kScenarioNames) {
    SuiteResult result = run_suite(scenario(name));
    summaries[name] = result.summary;
    groups.push_back(std::move(result.runs));
  }
  const fs::path csv = dir / "metrics.csv";
  write_csv(groups, csv);
  const auto records = read_csv(csv);

  std::size_t checked = 0;
  for (const auto& [name, summary] : summaries) {
    double abs_sum = 0.0, pct_sum = 0.0;
    std::size_t n = 0, attacked = 0, successes = 0;
    for (const CsvRecord& r : records) {
      if (r.scenario != name || r.condition != Condition::Adversarial) continue;
      ++n;
      abs_sum += r.delay_abs.value_or(0.0);
      pct_sum += r.delay_pct.value_or(0.0);
      if (r.success) {
        ++attacked;
        successes += *r.success;
      }
    }
    if (n != summary.adversarial_runs) return {false, name + ": run count mismatch"};
    const double abs_mean = abs_sum / static_cast<double>(n);
    const double pct_mean = pct_sum / static_cast<double>(n);
    if (std::abs(abs_mean - summary.overall_mean_delay_abs) > kMetricTolerance) {
      return {false, name + fmt(": delay_abs %.9f vs %.9f", abs_mean, summary.overall_mean_delay_abs)};
    }
    if (std::abs(pct_mean - summary.overall_mean_delay_pct) > kMetricTolerance) {
      return {false, name + fmt(": delay_pct %.9f vs %.9f", pct_mean, summary.overall_mean_delay_pct)};
    }
    if (attacked == 0) {
      if (summary.success_rate) return {false, name + ": success rate should be NA"};
    } else {
      const double rate = 100.0 * static_cast<double>(successes) / static_cast<double>(attacked);
      if (!summary.success_rate || std::abs(rate - *summary.success_rate) > kMetricTolerance) {
        return {false, name + ": success rate mismatch"};
      }
    }
    // each row's own identities
    for (const CsvRecord& r : records) {
      if (r.scenario != name || r.condition != Condition::Adversarial) continue;
      double benign = 0.0;
      for (const CsvRecord& b : records) {
        if (b.scenario == name && b.goal == r.goal && b.condition == Condition::Benign && b.repeat == r.repeat) {
          benign = b.time;
        }
      }
      if (std::abs((r.time - benign) - *r.delay_abs) > 2e-6) return {false, name + ": row delay_abs"};
      if (benign > 0 && std::abs(100.0 * *r.delay_abs / benign - *r.delay_pct) > 1e-3) {
        return {false, name + ": row delay_pct"};
      }
    }
    ++checked;
  }
  return {checked == kScenarioNames.size(), std::to_string(checked) + " scenarios, " +
                                                std::to_string(records.size()) + " rows"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "obstacle_attack_determinism";
  fs::remove_all(root);
  std::string scenarios;
  for (const std::string& name : kScenarioNames) scenarios += " " + data_path("scenarios/" + name + ".scn");
  for (const char* run : {"a", "b"}) {
    const fs::path dir = root / run;
    fs::create_directories(dir);
    const std::string cmd = std::string(OBSTACLE_ATTACK_CLI) + " suite" + scenarios + " --csv " +
                            (dir / "out.csv").string() + " --svg-dir " + (dir / "svg").string() + " > " +
                            (dir / "stdout.txt").string();
    if (std::system(cmd.c_str()) != 0) return {false, "suite command failed"};
  }
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root / "a")) {
    if (!entry.is_regular_file()) continue;
    const fs::path other = root / "b" / fs::relative(entry.path(), root / "a");
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      return {false, "differs: " + fs::relative(entry.path(), root / "a").string()};
    }
    ++files;
  }
  return {files > 2, std::to_string(files) + " files byte-identical"};
}

Verdict monotonicity_sweep() {
  const GridMap branch = parse_map(kBranchMap);
  std::string detail;
  double previous_gain = -1.0;
  bool in_blocking_regime = false;
  bool pass = true;
  for (const int side : {1, 3, 5}) {
    const AttackPlan plan = brute_force_attack(branch, {1, 1}, {5, 1}, side);
    const bool any_evaluated = plan.count(Outcome::Evaluated) > 0;
    detail += "side " + std::to_string(side) + ": " +
              (plan.best ? "gain " + format_fixed(plan.gain) : std::string("no placement")) + "; ";
    if (!any_evaluated) {
      in_blocking_regime = true;
      pass = pass && !plan.best;
      continue;
    }
    if (in_blocking_regime) pass = false;  // regime must not reopen
    pass = pass && plan.gain >= previous_gain - kCostTolerance;
    previous_gain = plan.gain;
  }
  // Single corridor: every candidate blocks, so no placement is reported.
  const AttackPlan corridor = brute_force_attack(parse_map(kCorridorMap), {1, 1}, {5, 1}, 1);
  const bool corridor_ok = !corridor.best && corridor.count(Outcome::Evaluated) == 0 &&
                           corridor.count(Outcome::Blocking) > 0;
  detail += corridor_ok ? "corridor: all blocking, no placement" : "corridor: unexpected placement";
  return {pass && corridor_ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 planner oracle equivalence", planner_oracle_equivalence},
      {"2 attack oracle equivalence", attack_oracle_equivalence},
      {"3 non-blocking guarantee", non_blocking_guarantee},
      {"4 constrained-environment ordering", constrained_ordering},
      {"5 warehouse delay band", warehouse_delay_band},
      {"6 success-rate race", success_rate_race},
      {"7 metric identities", metric_identities},
      {"8 determinism", determinism},
      {"9 monotonicity sweep", monotonicity_sweep},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    failures += !outcome.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
