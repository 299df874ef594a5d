#include "coverdecomp/formats.hpp"

#include <cstdio>
#include <fstream>

#include "coverdecomp/errors.hpp"

namespace covdec {

using nlohmann::json;

CoverInstance InstanceFile::to_cover_instance() const {
    if (kind != "covering") throw ParseError("instance is not a covering");
    if (!region) throw ParseError("covering instance lacks a region");
    if (!fold_target) throw ParseError("covering instance lacks fold_target");
    CoverInstance inst;
    inst.polygon = polygon;
    inst.centers = points;
    inst.region = *region;
    inst.fold_target = *fold_target;
    return inst;
}

json point_to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("point must be a two-element array of rational strings");
    return Point{Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>())};
}

json rect_to_json(const Rect& r) {
    return json{{"x_min", r.x_min.str()},
                {"x_max", r.x_max.str()},
                {"y_min", r.y_min.str()},
                {"y_max", r.y_max.str()}};
}

Rect rect_from_json(const json& j) {
    return Rect::make(Rat::parse(j.at("x_min").get<std::string>()),
                      Rat::parse(j.at("x_max").get<std::string>()),
                      Rat::parse(j.at("y_min").get<std::string>()),
                      Rat::parse(j.at("y_max").get<std::string>()));
}

json instance_to_json(const InstanceFile& f) {
    json j;
    j["version"] = kFormatVersion;
    j["kind"] = f.kind;
    json poly = json::array();
    for (const Point& v : f.polygon.vertices()) poly.push_back(point_to_json(v));
    j["polygon"] = poly;
    json pts = json::array();
    for (const Point& p : f.points) pts.push_back(point_to_json(p));
    j[f.kind == "covering" ? "centers" : "points"] = pts;
    if (f.region) j["region"] = rect_to_json(*f.region);
    if (f.fold_target) j["fold_target"] = *f.fold_target;
    if (f.seed) j["seed"] = *f.seed;
    return j;
}

InstanceFile instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (j.value("version", "") != kFormatVersion)
        throw ParseError("unsupported or missing version (want " + std::string(kFormatVersion) +
                         ")");
    InstanceFile f;
    f.kind = j.value("kind", j.contains("centers") ? "covering" : "points");
    if (f.kind != "points" && f.kind != "covering")
        throw ParseError("kind must be \"points\" or \"covering\"");
    std::vector<Point> verts;
    for (const json& v : j.at("polygon")) verts.push_back(point_from_json(v));
    f.polygon = Polygon::from_vertices(std::move(verts));
    const char* key = f.kind == "covering" ? "centers" : "points";
    if (j.contains(key))
        for (const json& p : j.at(key)) f.points.push_back(point_from_json(p));
    if (j.contains("region")) f.region = rect_from_json(j.at("region"));
    if (j.contains("fold_target")) f.fold_target = j.at("fold_target").get<long long>();
    if (j.contains("seed")) f.seed = j.at("seed").get<std::uint64_t>();
    return f;
}

json colors_to_json(const std::map<Point, RBColor>& rb) {
    json out = json::array();
    for (const auto& [p, c] : rb)
        out.push_back(json{{"point", point_to_json(p)},
                           {"color", c == RBColor::Red ? "red" : "blue"}});
    return out;
}

std::map<Point, RBColor> colors_from_json(const json& j) {
    std::map<Point, RBColor> rb;
    for (const json& entry : j) {
        const Point p = point_from_json(entry.at("point"));
        const std::string c = entry.at("color").get<std::string>();
        if (c != "red" && c != "blue") throw ParseError("color must be red or blue");
        rb[p] = c == "red" ? RBColor::Red : RBColor::Blue;
    }
    return rb;
}

json coloring_result_to_json(const ColoringResult& r) {
    json j;
    j["colors"] = colors_to_json(r.rb);
    json levels = json::array();
    for (const auto& [p, lvl] : r.level_audit)
        levels.push_back(json{{"point", point_to_json(p)}, {"level", lvl}});
    j["levels"] = levels;
    json bw = json::array();
    for (const auto& [key, c] : r.bw_audit)
        bw.push_back(json{{"level", key.first},
                          {"point", point_to_json(key.second)},
                          {"bw", c == BWColor::Black ? "black" : "white"}});
    j["black_white"] = bw;
    json rich = json::array();
    for (const Point& p : r.rich_audit) rich.push_back(point_to_json(p));
    j["rich"] = rich;
    if (!r.step1_audit.empty()) {
        json s1 = json::array();
        for (const Step1Pick& pick : r.step1_audit)
            s1.push_back(json{{"point", point_to_json(pick.point)},
                              {"level", pick.level},
                              {"color", pick.color == RBColor::Red ? "red" : "blue"}});
        j["step1"] = s1;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json decomposition_to_json(const Decomposition& d) {
    json j;
    json red = json::array(), blue = json::array();
    for (const Point& p : d.red_centers) red.push_back(point_to_json(p));
    for (const Point& p : d.blue_centers) blue.push_back(point_to_json(p));
    j["red_centers"] = red;
    j["blue_centers"] = blue;
    j["x"] = d.grid.cell_side.str();
    j["k_prime"] = d.grid.squares_per_translate;
    j["k"] = d.grid.fold_constant;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ParseError("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ParseError("cannot rename " + tmp + " to " + path);
}

void write_json_file(const std::string& path, const json& j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace covdec
