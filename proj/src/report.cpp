#include "obstacle_attack/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "obstacle_attack/error.hpp"
#include "obstacle_attack/svg.hpp"

namespace obstacle_attack {

namespace {

constexpr std::size_t kColumns = 13;

std::string quote_if_needed(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(current));
  return fields;
}

double to_double(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

int to_int(const std::string& s, std::size_t line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

std::optional<double> opt_double(const std::string& s, std::size_t line_no) {
  if (s.empty()) return std::nullopt;
  return to_double(s, line_no);
}

}  // namespace

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out = buf;
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string csv_row(const RunRecord& record) {
  const RunResult& r = record.result;
  const bool adversarial = record.condition == Condition::Adversarial;
  std::string row = quote_if_needed(record.scenario);
  auto add = [&row](const std::string& field) {
    row += ',';
    row += field;
  };
  add(std::to_string(record.goal.col));
  add(std::to_string(record.goal.row));
  add(to_string(record.condition));
  add(std::to_string(record.repeat));
  add(format_fixed(r.euclidean));
  add(format_fixed(record.time()));
  add(adversarial && r.spawn_time ? format_fixed(*r.spawn_time) : "");
  add(adversarial && r.obstacle ? std::to_string(r.obstacle->center.col) : "");
  add(adversarial && r.obstacle ? std::to_string(r.obstacle->center.row) : "");
  add(adversarial && r.attack_success ? (*r.attack_success ? "true" : "false") : "");
  add(adversarial && r.delay_abs ? format_fixed(*r.delay_abs) : "");
  add(adversarial && r.delay_pct ? format_fixed(*r.delay_pct) : "");
  return row;
}

std::string to_csv(const std::vector<std::vector<RunRecord>>& groups) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const auto& group : groups) {
    for (const RunRecord& record : group) {
      out += csv_row(record);
      out += '\n';
    }
  }
  return out;
}

void write_csv(const std::vector<std::vector<RunRecord>>& groups, const std::filesystem::path& out_path) {
  write_text_file(out_path, to_csv(groups));
}

std::vector<CsvRecord> parse_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw Error(Errc::BadValue, "csv header mismatch");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_fields(line, line_no);
    if (f.size() != kColumns) {
      throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": expected " +
                                      std::to_string(kColumns) + " fields");
    }
    CsvRecord rec;
    rec.scenario = f[0];
    rec.goal = {to_int(f[1], line_no), to_int(f[2], line_no)};
    if (f[3] == "benign") {
      rec.condition = Condition::Benign;
    } else if (f[3] == "adversarial") {
      rec.condition = Condition::Adversarial;
    } else {
      throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": bad condition '" + f[3] + "'");
    }
    rec.repeat = to_int(f[4], line_no);
    rec.euclidean = to_double(f[5], line_no);
    rec.time = to_double(f[6], line_no);
    rec.spawn_time = opt_double(f[7], line_no);
    if (!f[8].empty() || !f[9].empty()) rec.obstacle = Cell{to_int(f[8], line_no), to_int(f[9], line_no)};
    if (f[10] == "true") {
      rec.success = true;
    } else if (f[10] == "false") {
      rec.success = false;
    } else if (!f[10].empty()) {
      throw Error(Errc::BadValue, "csv line " + std::to_string(line_no) + ": bad success flag");
    }
    rec.delay_abs = opt_double(f[11], line_no);
    rec.delay_pct = opt_double(f[12], line_no);
    records.push_back(std::move(rec));
  }
  if (line_no == 0) throw Error(Errc::BadValue, "csv is empty");
  return records;
}

std::vector<CsvRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open csv '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

std::string format_summary(const std::string& scenario, const MetricsSummary& summary) {
  std::ostringstream out;
  out << "scenario " << scenario << '\n';
  out << "  goal        benign_s   adversarial_s   delay_s     delay_pct\n";
  for (const GoalSummary& g : summary.per_goal) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-10s %10.3f %15.3f %9.3f %12.2f%%\n", to_string(g.goal).c_str(),
                  g.mean_benign_time, g.mean_adversarial_time, g.mean_delay_abs, g.mean_delay_pct);
    out << line;
  }
  for (const SkippedGoal& s : summary.skipped) {
    out << "  " << to_string(s.goal) << " skipped (" << s.reason << ")\n";
  }
  out << "  mean_delay_s=" << format_fixed(summary.overall_mean_delay_abs)
      << " mean_delay_pct=" << format_fixed(summary.overall_mean_delay_pct)
      << " success_rate=" << (summary.success_rate ? format_fixed(*summary.success_rate) : "NA")
      << " runs=" << summary.adversarial_runs * 2 << '\n';
  return out.str();
}

}  // namespace obstacle_attack
