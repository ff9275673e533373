#include "obstacle_attack/sim.hpp"

#include <algorithm>
#include <cmath>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

namespace {

// Distances within this slack of a cell centre count as having reached it.
constexpr double kArrivalSlack = 1e-9;

Point center_of(Cell c, double cell_size) {
  return {(c.col + 0.5) * cell_size, (c.row + 0.5) * cell_size};
}

}  // namespace

void SimConfig::validate() const {
  if (!(speed > 0.0)) throw Error(Errc::BadValue, "speed must be positive");
  if (!(eval_time_per_candidate >= 0.0)) {
    throw Error(Errc::BadValue, "eval_time_per_candidate must be non-negative");
  }
  if (!(attack_start_delay >= 0.0)) throw Error(Errc::BadValue, "attack_start_delay must be non-negative");
}

std::vector<double> arrival_distances(const Path& path, double cell_size) {
  std::vector<double> d(path.cells.size(), 0.0);
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    const bool diagonal = path.cells[i].col != path.cells[i - 1].col &&
                          path.cells[i].row != path.cells[i - 1].row;
    d[i] = d[i - 1] + (diagonal ? kSqrt2 : 1.0) * cell_size;
  }
  return d;
}

Position position_at(const Path& path, double cell_size, double speed, double t) {
  if (path.cells.empty()) return {};
  const std::vector<double> d = arrival_distances(path, cell_size);
  const double s = speed * std::max(t, 0.0);
  const std::size_t last = path.cells.size() - 1;
  if (s + kArrivalSlack >= d[last]) return {center_of(path.cells[last], cell_size), last};

  // Largest index whose centre has been reached.
  const auto it = std::upper_bound(d.begin(), d.end(), s + kArrivalSlack);
  const auto passed = static_cast<std::size_t>(std::distance(d.begin(), it)) - 1;
  const Point a = center_of(path.cells[passed], cell_size);
  const Point b = center_of(path.cells[passed + 1], cell_size);
  const double u = std::clamp((s - d[passed]) / (d[passed + 1] - d[passed]), 0.0, 1.0);
  return {{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)}, passed};
}

double spawn_time_model(const AttackPlan& plan, const SimConfig& config) {
  const auto planned = plan.count(Outcome::Evaluated) + plan.count(Outcome::Blocking);
  return config.attack_start_delay + config.eval_time_per_candidate * static_cast<double>(planned);
}

RunTrace simulate_trace(const GridMap& map, Cell start, Cell goal, const SimConfig& config,
                        int side) {
  config.validate();
  RunTrace trace;
  RunResult& r = trace.result;
  r.start = start;
  r.goal = goal;
  r.euclidean = euclidean_distance(start, goal, map.cell_size());

  if (config.attack_enabled) {
    trace.plan = brute_force_attack(map, start, goal, side);
    trace.baseline = trace.plan->baseline;
  } else {
    try {
      trace.baseline = astar(map, start, goal);
    } catch (const Error& e) {
      if (e.code() == Errc::NoPath || e.code() == Errc::BadEndpoint) throw Error(Errc::NoBaseline, e.what());
      throw;
    }
  }
  const Path& baseline = trace.baseline;
  trace.route = baseline.cells;
  r.benign_time = baseline.metric_length / config.speed;
  if (!config.attack_enabled) return trace;

  auto finish = [&r](double adversarial_time) {
    r.adversarial_time = adversarial_time;
    r.delay_abs = adversarial_time - r.benign_time;
    r.delay_pct = r.benign_time > 0.0 ? 100.0 * *r.delay_abs / r.benign_time : 0.0;
  };

  const AttackPlan& plan = *trace.plan;
  if (!plan.best) {
    finish(r.benign_time);
    return trace;
  }

  const ObstaclePlacement obstacle = *plan.best;
  const double spawn = spawn_time_model(plan, config);
  r.spawn_time = spawn;
  r.obstacle = obstacle;

  const std::vector<double> d = arrival_distances(baseline, map.cell_size());
  std::size_t first_hit = 0;
  while (!obstacle.covers(baseline.cells[first_hit])) ++first_hit;
  const double pass_time = d[first_hit] / config.speed;
  trace.pass_time = pass_time;
  r.attack_success = spawn < pass_time;
  if (!*r.attack_success) {
    finish(r.benign_time);
    return trace;
  }

  // Replan from the next cell centre the robot has not passed. If that centre
  // is already under the obstacle (spawn caught the robot mid-step into the
  // footprint) the robot turns back to the centre it just left.
  const GridMap obstructed = apply_obstacle(map, obstacle);
  const double travelled = config.speed * spawn;
  std::size_t from = static_cast<std::size_t>(
      std::distance(d.begin(), std::lower_bound(d.begin(), d.end(), travelled - kArrivalSlack)));
  double resume_time = d[from] / config.speed;
  if (obstructed.occupied(baseline.cells[from])) {
    from -= 1;
    resume_time = spawn + (travelled - d[from]) / config.speed;
  }
  trace.replan_from = from;

  Path replanned;
  try {
    replanned = astar(obstructed, baseline.cells[from], goal);
  } catch (const Error& e) {
    throw Error(Errc::ReplanFailed, std::string("obstructed map unsolvable from ") +
                                        to_string(baseline.cells[from]) + ": " + e.what());
  }
  trace.route.assign(baseline.cells.begin(), baseline.cells.begin() + static_cast<std::ptrdiff_t>(from));
  trace.route.insert(trace.route.end(), replanned.cells.begin(), replanned.cells.end());

  const double remaining = baseline.cost - (d[from] / map.cell_size());
  if (resume_time * config.speed <= d[from] + kArrivalSlack &&
      std::abs(replanned.cost - remaining) <= kCostTolerance) {
    finish(r.benign_time);  // an equally short way round: no delay
  } else {
    finish(resume_time + replanned.metric_length / config.speed);
  }
  trace.replanned = std::move(replanned);
  return trace;
}

RunResult simulate(const GridMap& map, Cell start, Cell goal, const SimConfig& config, int side) {
  return simulate_trace(map, start, goal, config, side).result;
}

}  // namespace obstacle_attack
