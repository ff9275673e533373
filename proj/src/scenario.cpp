#include "obstacle_attack/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

}  // namespace

SimConfig Scenario::sim_config(bool attack_enabled) const {
  SimConfig config;
  config.speed = speed;
  config.attack_enabled = attack_enabled;
  config.eval_time_per_candidate = eval_time_per_candidate;
  config.attack_start_delay = attack_start_delay;
  return config;
}

Cell parse_cell(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(Errc::BadValue, "expected col,row but got '" + std::string(text) + "'");
  }
  const auto col = parse_number<int>(text.substr(0, comma));
  const auto row = parse_number<int>(text.substr(comma + 1));
  if (!col || !row) throw Error(Errc::BadValue, "expected col,row but got '" + std::string(text) + "'");
  return {*col, *row};
}

Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  static const std::map<std::string, bool, std::less<>> kKeys{
      {"name", false},       {"map", false},           {"cell_size", false},
      {"start", false},      {"goal", true},           {"speed", false},
      {"obstacle_side", false}, {"eval_time_per_candidate", false},
      {"attack_start_delay", false}, {"repeats", false},
  };

  std::map<std::string, Entry, std::less<>> single;
  std::vector<Entry> goals;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::BadValue, at_line(line_no) + "expected 'key = value'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    const auto known = kKeys.find(key);
    if (known == kKeys.end()) throw Error(Errc::UnknownKey, at_line(line_no) + "unknown key '" + key + "'");
    if (value.empty()) throw Error(Errc::BadValue, at_line(line_no) + "empty value for '" + key + "'");
    if (known->second) {
      goals.push_back({value, line_no});
    } else if (!single.emplace(key, Entry{value, line_no}).second) {
      throw Error(Errc::BadValue, at_line(line_no) + "duplicate key '" + key + "'");
    }
  }

  auto require = [&](std::string_view key) -> const Entry& {
    const auto it = single.find(key);
    if (it == single.end()) throw Error(Errc::MissingKey, "missing required key '" + std::string(key) + "'");
    return it->second;
  };
  auto number = [&](std::string_view key, double fallback, bool required) {
    const auto it = single.find(key);
    if (it == single.end()) {
      if (required) require(key);
      return fallback;
    }
    const auto v = parse_number<double>(it->second.value);
    if (!v) throw Error(Errc::BadValue, at_line(it->second.line) + "'" + std::string(key) + "' is not a number");
    return *v;
  };
  auto integer = [&](std::string_view key, int fallback) {
    const auto it = single.find(key);
    if (it == single.end()) return fallback;
    const auto v = parse_number<int>(it->second.value);
    if (!v) throw Error(Errc::BadValue, at_line(it->second.line) + "'" + std::string(key) + "' is not an integer");
    return *v;
  };
  auto cell = [&](const Entry& e) {
    try {
      return parse_cell(e.value);
    } catch (const Error&) {
      throw Error(Errc::BadValue, at_line(e.line) + "expected col,row but got '" + e.value + "'");
    }
  };

  const Entry& name = require("name");
  const Entry& map_entry = require("map");
  const Entry& start_entry = require("start");
  if (goals.empty()) throw Error(Errc::MissingKey, "missing required key 'goal'");

  const double cell_size = number("cell_size", 1.0, true);
  if (!(cell_size > 0.0)) {
    throw Error(Errc::BadValue, at_line(single.find("cell_size")->second.line) + "cell_size must be positive");
  }
  const double speed = number("speed", 1.0, true);
  if (!(speed > 0.0)) throw Error(Errc::BadValue, at_line(single.find("speed")->second.line) + "speed must be positive");
  const double eval_time = number("eval_time_per_candidate", kDefaultEvalTimePerCandidate, false);
  if (!(eval_time >= 0.0)) {
    throw Error(Errc::BadValue, at_line(single.find("eval_time_per_candidate")->second.line) +
                                    "eval_time_per_candidate must be non-negative");
  }
  const double start_delay = number("attack_start_delay", 0.0, false);
  if (!(start_delay >= 0.0)) {
    throw Error(Errc::BadValue, at_line(single.find("attack_start_delay")->second.line) +
                                    "attack_start_delay must be non-negative");
  }
  const int side = integer("obstacle_side", kDefaultObstacleSide);
  if (side < 1 || side % 2 == 0) {
    throw Error(Errc::BadValue, at_line(single.find("obstacle_side")->second.line) +
                                    "obstacle_side must be an odd integer >= 1");
  }
  const int repeats = integer("repeats", kDefaultRepeats);
  if (repeats < 1) throw Error(Errc::BadValue, at_line(single.find("repeats")->second.line) + "repeats must be >= 1");

  std::filesystem::path map_file{map_entry.value};
  if (map_file.is_relative() && !base_dir.empty()) map_file = base_dir / map_file;
  GridMap map = load_map(map_file.string()).with_cell_size(cell_size);

  auto check_free = [&map](const Entry& e, Cell c, const char* what) {
    if (!map.in_bounds(c)) throw Error(Errc::BadValue, at_line(e.line) + what + " " + to_string(c) + " is out of bounds");
    if (map.occupied(c)) throw Error(Errc::BadValue, at_line(e.line) + what + " " + to_string(c) + " is occupied");
  };
  const Cell start = cell(start_entry);
  check_free(start_entry, start, "start");
  std::vector<Cell> goal_cells;
  for (const Entry& g : goals) {
    const Cell c = cell(g);
    check_free(g, c, "goal");
    goal_cells.push_back(c);
  }

  return Scenario{
      .name = name.value,
      .map_path = map_entry.value,
      .map = std::move(map),
      .cell_size = cell_size,
      .start = start,
      .goals = std::move(goal_cells),
      .speed = speed,
      .obstacle_side = side,
      .eval_time_per_candidate = eval_time,
      .attack_start_delay = start_delay,
      .repeats = repeats,
  };
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.parent_path());
}

}  // namespace obstacle_attack
