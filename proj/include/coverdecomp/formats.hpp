#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "coverdecomp/coloring.hpp"
#include "coverdecomp/decomposer.hpp"

namespace covdec {

inline constexpr const char* kFormatVersion = "coverdecomp/1";

// On-disk instance: polygon plus either a plain point set or the centers of
// a covering with region and fold target. All geometry as "num/den" strings.
struct InstanceFile {
    std::string kind = "points";  // "points" or "covering"
    Polygon polygon;
    PointSet points;  // interpreted as centers when kind == "covering"
    std::optional<Rect> region;
    std::optional<long long> fold_target;
    std::optional<std::uint64_t> seed;

    CoverInstance to_cover_instance() const;
};

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);
nlohmann::json rect_to_json(const Rect& r);
Rect rect_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const InstanceFile& f);
InstanceFile instance_from_json(const nlohmann::json& j);

nlohmann::json colors_to_json(const std::map<Point, RBColor>& rb);
std::map<Point, RBColor> colors_from_json(const nlohmann::json& j);

nlohmann::json coloring_result_to_json(const ColoringResult& r);

nlohmann::json decomposition_to_json(const Decomposition& d);

nlohmann::json read_json_file(const std::string& path);
// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace covdec
