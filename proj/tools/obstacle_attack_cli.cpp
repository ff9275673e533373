// obstacle-attack: plan, attack, simulate and run experiment suites on ASCII
// grid maps.
//
//   obstacle-attack plan <map> <start> <goal>
//   obstacle-attack attack <map> <start> <goal> [--side N]
//   obstacle-attack simulate <scenario>
//   obstacle-attack suite <scenario...> --csv <path> [--svg-dir <dir>]
//   obstacle-attack render <map> <start> <goal> --out <svg> [--side N] [--benign]
//   obstacle-attack render --scenario <scenario> --out <svg>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "obstacle_attack/attack.hpp"
#include "obstacle_attack/error.hpp"
#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/planner.hpp"
#include "obstacle_attack/report.hpp"
#include "obstacle_attack/scenario.hpp"
#include "obstacle_attack/sim.hpp"
#include "obstacle_attack/suite.hpp"
#include "obstacle_attack/svg.hpp"

namespace fs = std::filesystem;
using namespace obstacle_attack;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string cells_line(const std::vector<Cell>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ' ';
    out += to_string(cells[i]);
  }
  return out;
}

GridMap load_with_cell_size(const std::string& path, double cell_size) {
  return load_map(path).with_cell_size(cell_size);
}

int cmd_plan(const std::string& map_path, const std::string& start, const std::string& goal,
             double cell_size) {
  const GridMap map = load_with_cell_size(map_path, cell_size);
  const Path path = astar(map, parse_cell(start), parse_cell(goal));
  std::cout << "cost=" << format_fixed(path.cost) << '\n'
            << "length_m=" << format_fixed(path.metric_length) << '\n'
            << "cells=" << cells_line(path.cells) << '\n';
  return 0;
}

int cmd_attack(const std::string& map_path, const std::string& start, const std::string& goal, int side,
               double cell_size) {
  const GridMap map = load_with_cell_size(map_path, cell_size);
  const AttackPlan plan = brute_force_attack(map, parse_cell(start), parse_cell(goal), side);
  std::cout << "baseline_cost=" << format_fixed(plan.baseline.cost) << '\n';
  for (const CandidateEval& e : plan.ledger) {
    std::cout << "candidate index=" << e.index << " center=" << to_string(e.placement.center)
              << " outcome=" << to_string(e.outcome);
    if (e.outcome == Outcome::Evaluated) std::cout << " cost=" << format_fixed(e.cost);
    std::cout << '\n';
  }
  if (plan.best) {
    std::cout << "attacked_cells=" << cells_line(plan.attacked_path->cells) << '\n';
    std::cout << "best=" << to_string(plan.best->center) << " gain=" << format_fixed(plan.gain) << '\n';
  } else {
    std::cout << "best=none gain=" << format_fixed(0.0) << '\n';
  }
  return 0;
}

void print_run(const std::string& condition, const RunResult& r) {
  std::cout << "goal=" << to_string(r.goal) << " condition=" << condition
            << " euclidean_m=" << format_fixed(r.euclidean);
  if (condition == "benign") {
    std::cout << " time_s=" << format_fixed(r.benign_time) << '\n';
    return;
  }
  std::cout << " time_s=" << format_fixed(r.adversarial_time.value_or(r.benign_time));
  if (r.spawn_time) std::cout << " spawn_time_s=" << format_fixed(*r.spawn_time);
  if (r.obstacle) std::cout << " obstacle=" << to_string(r.obstacle->center);
  std::cout << " success=" << (r.attack_success ? (*r.attack_success ? "true" : "false") : "NA");
  if (r.delay_abs) std::cout << " delay_abs_s=" << format_fixed(*r.delay_abs);
  if (r.delay_pct) std::cout << " delay_pct=" << format_fixed(*r.delay_pct);
  std::cout << '\n';
}

int cmd_simulate(const std::string& scenario_path) {
  const Scenario scenario = load_scenario(scenario_path);
  for (const Cell goal : scenario.goals) {
    try {
      print_run("benign", simulate(scenario.map, scenario.start, goal, scenario.sim_config(false),
                                   scenario.obstacle_side));
      print_run("adversarial", simulate(scenario.map, scenario.start, goal, scenario.sim_config(true),
                                        scenario.obstacle_side));
    } catch (const Error& e) {
      if (e.code() != Errc::NoBaseline) throw;
      std::cout << "goal=" << to_string(goal) << " skipped " << e.what() << '\n';
    }
  }
  return 0;
}

void write_suite_svgs(const Scenario& scenario, const SuiteResult& result, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<Cell> goals;
  std::vector<ObstaclePlacement> obstacles;
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    const RunTrace& trace = result.traces[i];
    goals.push_back(trace.result.goal);
    std::optional<Path> taken;
    if (trace.replanned) taken = make_path(trace.route, scenario.map.cell_size());
    if (trace.result.obstacle) obstacles.push_back(*trace.result.obstacle);
    char name[64];
    std::snprintf(name, sizeof name, "_goal%02zu.svg", i);
    render_svg(scenario.map, trace.baseline, taken, trace.result.obstacle, dir / (scenario.name + name));
  }
  render_overlay_svg(scenario.map, scenario.start, goals, obstacles, dir / (scenario.name + "_obstacles.svg"));
}

int cmd_suite(const std::vector<std::string>& scenario_paths, const std::string& csv_path,
              const std::string& svg_dir) {
  std::vector<std::vector<RunRecord>> groups;
  for (const std::string& path : scenario_paths) {
    const Scenario scenario = load_scenario(path);
    SuiteResult result = run_suite(scenario);
    std::cout << format_summary(scenario.name, result.summary);
    if (!svg_dir.empty()) write_suite_svgs(scenario, result, svg_dir);
    groups.push_back(std::move(result.runs));
  }
  write_csv(groups, csv_path);
  return 0;
}

int cmd_render(const std::vector<std::string>& args, const std::string& scenario_path, const std::string& out,
               int side, bool benign, double cell_size) {
  if (!scenario_path.empty()) {
    const Scenario scenario = load_scenario(scenario_path);
    std::vector<Cell> goals;
    std::vector<ObstaclePlacement> obstacles;
    for (const Cell goal : scenario.goals) {
      try {
        const AttackPlan plan = brute_force_attack(scenario.map, scenario.start, goal, scenario.obstacle_side);
        goals.push_back(goal);
        if (plan.best) obstacles.push_back(*plan.best);
      } catch (const Error& e) {
        if (e.code() != Errc::NoBaseline) throw;
      }
    }
    render_overlay_svg(scenario.map, scenario.start, goals, obstacles, out);
    return 0;
  }
  if (args.size() != 3) throw Error(Errc::BadValue, "render needs <map> <start> <goal> or --scenario");
  const GridMap map = load_with_cell_size(args[0], cell_size);
  const Cell start = parse_cell(args[1]);
  const Cell goal = parse_cell(args[2]);
  if (benign) {
    render_svg(map, astar(map, start, goal), std::nullopt, std::nullopt, out);
    return 0;
  }
  const AttackPlan plan = brute_force_attack(map, start, goal, side);
  render_svg(map, plan.baseline, plan.attacked_path, plan.best, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brute-force obstacle attack on grid A* planning"};
  app.require_subcommand(1);

  std::string map_path, start, goal, scenario_path, csv_path, svg_dir, out_path;
  std::vector<std::string> scenario_paths, render_args;
  int side = kDefaultObstacleSide;
  double cell_size = 1.0;
  bool benign = false;

  auto* plan = app.add_subcommand("plan", "Plan an optimal path and print its cost and cells");
  plan->add_option("map", map_path)->required();
  plan->add_option("start", start)->required();
  plan->add_option("goal", goal)->required();
  plan->add_option("--cell-size", cell_size, "Metres per cell");

  auto* attack = app.add_subcommand("attack", "Run the brute-force obstacle attack and print its ledger");
  attack->add_option("map", map_path)->required();
  attack->add_option("start", start)->required();
  attack->add_option("goal", goal)->required();
  attack->add_option("--side", side, "Obstacle side length in cells (odd)");
  attack->add_option("--cell-size", cell_size, "Metres per cell");

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one benign and one attacked run per goal");
  simulate_cmd->add_option("scenario", scenario_path)->required();

  auto* suite = app.add_subcommand("suite", "Run the benign/adversarial experiment protocol");
  suite->add_option("scenarios", scenario_paths)->required();
  suite->add_option("--csv", csv_path, "Output CSV path")->required();
  suite->add_option("--svg-dir", svg_dir, "Directory for per-goal and overlay SVGs");

  auto* render = app.add_subcommand("render", "Render a map, its paths and the chosen obstacle as SVG");
  render->add_option("args", render_args, "<map> <start> <goal>");
  render->add_option("--scenario", scenario_path, "Overlay every chosen obstacle of a scenario");
  render->add_option("--out", out_path, "Output SVG path")->required();
  render->add_option("--side", side, "Obstacle side length in cells (odd)");
  render->add_option("--cell-size", cell_size, "Metres per cell");
  render->add_flag("--benign", benign, "Draw only the unattacked path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*plan) return cmd_plan(map_path, start, goal, cell_size);
    if (*attack) return cmd_attack(map_path, start, goal, side, cell_size);
    if (*simulate_cmd) return cmd_simulate(scenario_path);
    if (*suite) return cmd_suite(scenario_paths, csv_path, svg_dir);
    if (*render) return cmd_render(render_args, scenario_path, out_path, side, benign, cell_size);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::IoError ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitValidation;
}
