#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/sim.hpp"

namespace obstacle_attack {

inline constexpr int kDefaultObstacleSide = 3;
inline constexpr int kDefaultRepeats = 3;
inline constexpr double kDefaultEvalTimePerCandidate = 0.05;

struct Scenario {
  std::string name;
  std::string map_path;  // as written in the file
  GridMap map;           // loaded, with cell_size applied
  double cell_size = 1.0;
  Cell start;
  std::vector<Cell> goals;
  double speed = 1.0;
  int obstacle_side = kDefaultObstacleSide;
  double eval_time_per_candidate = kDefaultEvalTimePerCandidate;
  double attack_start_delay = 0.0;
  int repeats = kDefaultRepeats;

  SimConfig sim_config(bool attack_enabled) const;
};

/// Parses `key = value` scenario text. `map` paths are resolved relative to
/// `base_dir`. Errors carry the offending line number.
Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir = {});

Scenario load_scenario(const std::filesystem::path& path);

/// "col,row" -> Cell; throws Error{BadValue}.
Cell parse_cell(std::string_view text);

}  // namespace obstacle_attack
