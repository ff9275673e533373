#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "obstacle_attack/gridmap.hpp"
#include "obstacle_attack/planner.hpp"

namespace obstacle_attack {

/// Map with the baseline path, optionally the path taken under attack and the
/// obstacle footprint. Output is byte-stable for identical inputs.
std::string svg_document(const GridMap& map, const Path& baseline,
                         const std::optional<Path>& attacked,
                         const std::optional<ObstaclePlacement>& obstacle);

/// Every chosen obstacle for one start and many goals on a single map.
std::string svg_overlay_document(const GridMap& map, Cell start, const std::vector<Cell>& goals,
                                 const std::vector<ObstaclePlacement>& obstacles);

void render_svg(const GridMap& map, const Path& baseline, const std::optional<Path>& attacked,
                const std::optional<ObstaclePlacement>& obstacle,
                const std::filesystem::path& out_path);

void render_overlay_svg(const GridMap& map, Cell start, const std::vector<Cell>& goals,
                        const std::vector<ObstaclePlacement>& obstacles,
                        const std::filesystem::path& out_path);

/// Writes `content` to `path`, throwing Error{IoError} on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace obstacle_attack
