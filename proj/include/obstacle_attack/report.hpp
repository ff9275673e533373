#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obstacle_attack/suite.hpp"

namespace obstacle_attack {

inline constexpr std::string_view kCsvHeader =
    "scenario,goal_col,goal_row,condition,repeat,euclidean_m,time_s,spawn_time_s,"
    "obstacle_col,obstacle_row,success,delay_abs_s,delay_pct";

/// Fixed six-decimal rendering used for every float in reports.
std::string format_fixed(double value);

std::string csv_row(const RunRecord& record);

/// Header plus one row per run, groups in the order given.
std::string to_csv(const std::vector<std::vector<RunRecord>>& groups);

void write_csv(const std::vector<std::vector<RunRecord>>& groups,
               const std::filesystem::path& out_path);

/// A CSV data row as read back from disk. Optional columns that were empty
/// stay empty.
struct CsvRecord {
  std::string scenario;
  Cell goal;
  Condition condition = Condition::Benign;
  int repeat = 0;
  double euclidean = 0.0;
  double time = 0.0;
  std::optional<double> spawn_time;
  std::optional<Cell> obstacle;
  std::optional<bool> success;
  std::optional<double> delay_abs;
  std::optional<double> delay_pct;
};

std::vector<CsvRecord> parse_csv(std::string_view text);
std::vector<CsvRecord> read_csv(const std::filesystem::path& path);

/// Human-readable summary in the layout of the experiment results table.
std::string format_summary(const std::string& scenario, const MetricsSummary& summary);

}  // namespace obstacle_attack
