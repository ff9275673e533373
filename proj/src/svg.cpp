#include "obstacle_attack/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

namespace {

constexpr int kPixelsPerCell = 16;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void open_document(std::ostringstream& out, const GridMap& map) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width() * kPixelsPerCell
      << "\" height=\"" << map.height() * kPixelsPerCell << "\" viewBox=\"0 0 " << map.width() << ' '
      << map.height() << "\">\n"
      << "<style>"
         ".free{fill:#f2f2f2}.occupied{fill:#303030}"
         ".obstacle rect{fill:#9a9a9a;stroke:#606060;stroke-width:0.08}"
         "polyline{fill:none;stroke-width:0.22;stroke-linejoin:round;stroke-linecap:round}"
         ".path-baseline{stroke:#1f77b4}"
         ".path-attacked{stroke:#d62728;stroke-dasharray:0.5 0.25}"
         ".start{fill:#2ca02c}.goal{fill:#ff7f0e}"
         "</style>\n";
  out << "<g class=\"map\">\n";
  for (int row = 0; row < map.height(); ++row) {
    for (int col = 0; col < map.width(); ++col) {
      out << "<rect class=\"" << (map.occupied({col, row}) ? "occupied" : "free") << "\" x=\"" << col
          << "\" y=\"" << row << "\" width=\"1\" height=\"1\"/>\n";
    }
  }
  out << "</g>\n";
}

void obstacle_group(std::ostringstream& out, const GridMap& map,
                    const std::vector<ObstaclePlacement>& obstacles) {
  if (obstacles.empty()) return;
  out << "<g class=\"obstacle\">\n";
  for (const ObstaclePlacement& o : obstacles) {
    const int h = o.half();
    const int x0 = std::max(0, o.center.col - h);
    const int y0 = std::max(0, o.center.row - h);
    const int x1 = std::min(map.width() - 1, o.center.col + h);
    const int y1 = std::min(map.height() - 1, o.center.row + h);
    if (x1 < x0 || y1 < y0) continue;
    out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << x1 - x0 + 1 << "\" height=\""
        << y1 - y0 + 1 << "\"/>\n";
  }
  out << "</g>\n";
}

void polyline(std::ostringstream& out, const char* cls, const Path& path) {
  out << "<polyline class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < path.cells.size(); ++i) {
    if (i) out << ' ';
    out << num(path.cells[i].col + 0.5) << ',' << num(path.cells[i].row + 0.5);
  }
  out << "\"/>\n";
}

void marker(std::ostringstream& out, const char* cls, Cell c) {
  out << "<circle class=\"" << cls << "\" cx=\"" << num(c.col + 0.5) << "\" cy=\"" << num(c.row + 0.5)
      << "\" r=\"0.35\"/>\n";
}

}  // namespace

std::string svg_document(const GridMap& map, const Path& baseline, const std::optional<Path>& attacked,
                         const std::optional<ObstaclePlacement>& obstacle) {
  std::ostringstream out;
  open_document(out, map);
  if (obstacle) obstacle_group(out, map, {*obstacle});
  polyline(out, "path-baseline", baseline);
  if (attacked) polyline(out, "path-attacked", *attacked);
  if (!baseline.cells.empty()) {
    marker(out, "start", baseline.cells.front());
    marker(out, "goal", baseline.cells.back());
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_overlay_document(const GridMap& map, Cell start, const std::vector<Cell>& goals,
                                 const std::vector<ObstaclePlacement>& obstacles) {
  std::ostringstream out;
  open_document(out, map);
  obstacle_group(out, map, obstacles);
  marker(out, "start", start);
  for (const Cell g : goals) marker(out, "goal", g);
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw Error(Errc::IoError, "failed writing '" + path.string() + "'");
}

void render_svg(const GridMap& map, const Path& baseline, const std::optional<Path>& attacked,
                const std::optional<ObstaclePlacement>& obstacle, const std::filesystem::path& out_path) {
  write_text_file(out_path, svg_document(map, baseline, attacked, obstacle));
}

void render_overlay_svg(const GridMap& map, Cell start, const std::vector<Cell>& goals,
                        const std::vector<ObstaclePlacement>& obstacles,
                        const std::filesystem::path& out_path) {
  write_text_file(out_path, svg_overlay_document(map, start, goals, obstacles));
}

}  // namespace obstacle_attack
