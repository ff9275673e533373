#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "obstacle_attack/error.hpp"
#include "obstacle_attack/scenario.hpp"
#include "test_support.hpp"

using namespace obstacle_attack;
using namespace obstacle_attack::testing;

namespace {

const std::filesystem::path kMaps = data_path("maps");

Errc parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_scenario(text, kMaps);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "expected failure for:\n" << text;
  return Errc::IoError;
}

const std::string kMinimal =
    "name = branch\n"
    "map = branch.txt\n"
    "cell_size = 0.5\n"
    "start = 1,1\n"
    "goal = 5,1\n"
    "speed = 0.25\n";

}  // namespace

TEST(ParseScenario, MinimalWithDefaults) {
  const Scenario s = parse_scenario(kMinimal, kMaps);
  EXPECT_EQ(s.name, "branch");
  EXPECT_EQ(s.map_path, "branch.txt");
  EXPECT_EQ(s.map.width(), 7);
  EXPECT_DOUBLE_EQ(s.map.cell_size(), 0.5);
  EXPECT_EQ(s.start, (Cell{1, 1}));
  EXPECT_EQ(s.goals, (std::vector<Cell>{{5, 1}}));
  EXPECT_DOUBLE_EQ(s.speed, 0.25);
  EXPECT_EQ(s.obstacle_side, 3);
  EXPECT_EQ(s.repeats, 3);
  EXPECT_DOUBLE_EQ(s.eval_time_per_candidate, 0.05);
  EXPECT_DOUBLE_EQ(s.attack_start_delay, 0.0);
}

TEST(ParseScenario, GoalsKeepOrder) {
  const Scenario s = parse_scenario(kMinimal + "goal = 1,3\n# comment line\ngoal = 3,3  # trailing\n", kMaps);
  EXPECT_EQ(s.goals, (std::vector<Cell>{{5, 1}, {1, 3}, {3, 3}}));
}

TEST(ParseScenario, OverridesAndConfig) {
  const Scenario s = parse_scenario(kMinimal +
                                        "obstacle_side = 1\nrepeats = 5\n"
                                        "eval_time_per_candidate = 0.2\nattack_start_delay = 1.5\n",
                                    kMaps);
  EXPECT_EQ(s.obstacle_side, 1);
  EXPECT_EQ(s.repeats, 5);
  const SimConfig c = s.sim_config(true);
  EXPECT_TRUE(c.attack_enabled);
  EXPECT_DOUBLE_EQ(c.eval_time_per_candidate, 0.2);
  EXPECT_DOUBLE_EQ(c.attack_start_delay, 1.5);
  EXPECT_FALSE(s.sim_config(false).attack_enabled);
}

TEST(ParseScenario, OccupiedStartIsBadValueWithLine) {
  std::string text = kMinimal;
  text.replace(text.find("start = 1,1"), 11, "start = 0,0");
  std::string message;
  EXPECT_EQ(parse_error(text, &message), Errc::BadValue);
  EXPECT_NE(message.find("line 4"), std::string::npos) << message;
}

TEST(ParseScenario, Errors) {
  EXPECT_EQ(parse_error("map = branch.txt\nstart = 1,1\ngoal = 5,1\nspeed = 1\ncell_size = 1\n"), Errc::MissingKey);
  EXPECT_EQ(parse_error("name = x\nmap = branch.txt\nstart = 1,1\nspeed = 1\ncell_size = 1\n"), Errc::MissingKey);
  EXPECT_EQ(parse_error("name = x\nmap = branch.txt\nstart = 1,1\ngoal = 5,1\ncell_size = 1\n"), Errc::MissingKey);
  std::string message;
  EXPECT_EQ(parse_error(kMinimal + "colour = red\n", &message), Errc::UnknownKey);
  EXPECT_NE(message.find("line 7"), std::string::npos) << message;
  EXPECT_EQ(parse_error(kMinimal + "repeats = 0\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "repeats = two\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "obstacle_side = 2\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "goal = 9,9\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "goal = 3\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "eval_time_per_candidate = -1\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "name = twice\n"), Errc::BadValue);
  EXPECT_EQ(parse_error(kMinimal + "just words\n"), Errc::BadValue);
  std::string bad_speed = kMinimal;
  bad_speed.replace(bad_speed.find("speed = 0.25"), 12, "speed = 0");
  EXPECT_EQ(parse_error(bad_speed), Errc::BadValue);
  std::string missing_map = kMinimal;
  missing_map.replace(missing_map.find("branch.txt"), 10, "nowhere.txt");
  EXPECT_EQ(parse_error(missing_map), Errc::IoError);
}

TEST(LoadScenario, ShippedScenariosParse) {
  for (const char* name : {"warehouse", "tunnel", "turn", "twall", "branch", "corridor"}) {
    const Scenario s = load_scenario(data_path(std::string("scenarios/") + name + ".scn"));
    EXPECT_EQ(s.name, name);
    EXPECT_FALSE(s.goals.empty());
  }
  const Scenario warehouse = load_scenario(data_path("scenarios/warehouse.scn"));
  EXPECT_GE(warehouse.goals.size(), 20u);
  EXPECT_EQ(warehouse.map.width(), 40);
  EXPECT_EQ(warehouse.map.height(), 30);
}

TEST(ParseCell, Forms) {
  EXPECT_EQ(parse_cell("3,4"), (Cell{3, 4}));
  EXPECT_EQ(parse_cell(" 3 , 4 "), (Cell{3, 4}));
  EXPECT_THROW(parse_cell("3;4"), Error);
  EXPECT_THROW(parse_cell("a,4"), Error);
}
