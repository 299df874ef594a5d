// Command-line surface: instance generation, coloring, decomposition,
// verification, claim checking, and SVG rendering.
//
// Exit codes: 0 pass, 2 verification violations, 3 input errors,
// 4 internal structural violation.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "coverdecomp/coloring.hpp"
#include "coverdecomp/decomposer.hpp"
#include "coverdecomp/errors.hpp"
#include "coverdecomp/formats.hpp"
#include "coverdecomp/oracle.hpp"
#include "coverdecomp/svg.hpp"

namespace {

using covdec::Closedness;
using covdec::ColoringResult;
using covdec::CoverInstance;
using covdec::InstanceFile;
using covdec::Point;
using covdec::PointSet;
using covdec::Polygon;
using covdec::RBColor;
using covdec::Rect;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 2;
constexpr int kExitInput = 3;
constexpr int kExitStructural = 4;

struct Options {
    std::string in_path, with_path, out_path;
    std::string polygon_name = "square";
    std::string kind = "points";
    std::string mode = "single";
    std::string closedness = "closed";
    std::string region_spec;
    int size = 25;
    long long fold = 0;
    std::uint64_t seed = 0;
    int m = 9;
    int jobs = 1;
};

Polygon polygon_from_flag(const std::string& name_or_path) {
    if (name_or_path == "square" || name_or_path == "hexagon" || name_or_path == "octagon")
        return covdec::builtin_polygon(name_or_path);
    const json j = covdec::read_json_file(name_or_path);
    return covdec::instance_from_json(j).polygon;
}

Rect region_from_flag(const std::string& spec) {
    // "x0,x1,y0,y1" as rational strings.
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4)
        throw covdec::ParseError("region must be x_min,x_max,y_min,y_max");
    return Rect::make(covdec::Rat::parse(parts[0]), covdec::Rat::parse(parts[1]),
                      covdec::Rat::parse(parts[2]), covdec::Rat::parse(parts[3]));
}

Closedness closedness_from_flag(const std::string& s) {
    if (s == "closed") return Closedness::Closed;
    if (s == "open") return Closedness::Open;
    throw covdec::ParseError("closedness must be closed or open");
}

json base_report(const std::string& command) {
    json j;
    j["version"] = covdec::kFormatVersion;
    j["command"] = command;
    return j;
}

void emit(const Options& opt, const json& report) {
    if (opt.out_path.empty()) std::cout << report.dump(2) << "\n";
    else covdec::write_json_file(opt.out_path, report);
}

int cmd_gen(const Options& opt) {
    InstanceFile f;
    f.polygon = polygon_from_flag(opt.polygon_name);
    f.seed = opt.seed;
    if (opt.kind == "points") {
        f.kind = "points";
        f.points = covdec::gen_points(opt.size, opt.seed);
    } else if (opt.kind == "covering") {
        f.kind = "covering";
        const Rect region = opt.region_spec.empty()
                                ? Rect::make(covdec::Rat(0), covdec::Rat(1), covdec::Rat(0),
                                             covdec::Rat(1))
                                : region_from_flag(opt.region_spec);
        long long fold = opt.fold;
        if (fold == 0) fold = covdec::grid_params(f.polygon).fold_constant;
        const CoverInstance inst = covdec::generate_covering(f.polygon, region, fold, opt.seed);
        f.points = inst.centers;
        f.region = inst.region;
        f.fold_target = inst.fold_target;
    } else {
        throw covdec::ParseError("gen kind must be points or covering");
    }
    emit(opt, covdec::instance_to_json(f));
    return kExitOk;
}

int cmd_color(const Options& opt, const std::string& command) {
    const InstanceFile f = covdec::instance_from_json(covdec::read_json_file(opt.in_path));
    ColoringResult result;
    if (opt.mode == "single") result = covdec::red_blue_coloring(f.points, f.polygon);
    else if (opt.mode == "multi") result = covdec::multiple_red_blue(f.points, f.polygon);
    else throw covdec::ParseError("mode must be single or multi");

    json report = base_report(command);
    const covdec::GridParams grid = covdec::grid_params(f.polygon);
    report["parameters"] = json{{"mode", opt.mode},
                                {"m", opt.m},
                                {"x", grid.cell_side.str()},
                                {"k_prime", grid.squares_per_translate},
                                {"k", grid.fold_constant}};
    report["results"] = covdec::coloring_result_to_json(result);
    if (opt.mode == "single") {
        const auto violations =
            covdec::verify_coloring(f.points, f.polygon, result.rb, opt.m);
        report["results"]["verify_violations"] = violations.size();
    }
    emit(opt, report);
    return kExitOk;
}

int cmd_decompose(const Options& opt, const std::string& command) {
    const InstanceFile f = covdec::instance_from_json(covdec::read_json_file(opt.in_path));
    const CoverInstance inst = f.to_cover_instance();
    json report = base_report(command);
    try {
        const covdec::Decomposition d = covdec::decompose(inst);
        report["parameters"] = json{{"fold_target", inst.fold_target}};
        report["results"] = covdec::decomposition_to_json(d);
        const covdec::DepthReport red = covdec::coverage_depth(
            inst.polygon, d.red_centers, inst.region, Closedness::Closed);
        const covdec::DepthReport blue = covdec::coverage_depth(
            inst.polygon, d.blue_centers, inst.region, Closedness::Closed);
        report["results"]["red_min_depth"] = red.min_depth;
        report["results"]["blue_min_depth"] = blue.min_depth;
        emit(opt, report);
        return kExitOk;
    } catch (const covdec::InsufficientFold& e) {
        report["error"] = e.what();
        emit(opt, report);
        std::cerr << "insufficient fold: " << e.what() << "\n";
        return kExitViolations;
    }
}

int cmd_verify(const Options& opt, const std::string& command) {
    const InstanceFile f = covdec::instance_from_json(covdec::read_json_file(opt.in_path));
    const json with = covdec::read_json_file(opt.with_path);
    json report = base_report(command);
    report["parameters"] = json{{"m", opt.m}};
    bool ok = true;

    if (with.contains("results") && with.at("results").contains("red_centers")) {
        // Decomposition report: both families must cover the region.
        const CoverInstance inst = f.to_cover_instance();
        const PointSet red = [&] {
            PointSet v;
            for (const json& p : with.at("results").at("red_centers"))
                v.push_back(covdec::point_from_json(p));
            return v;
        }();
        const PointSet blue = [&] {
            PointSet v;
            for (const json& p : with.at("results").at("blue_centers"))
                v.push_back(covdec::point_from_json(p));
            return v;
        }();
        Point witness;
        const bool red_ok =
            covdec::coverage_at_least(inst.polygon, red, inst.region, Closedness::Closed, 1,
                                      &witness);
        report["results"]["red_covers"] = red_ok;
        if (!red_ok) report["results"]["red_witness"] = covdec::point_to_json(witness);
        const bool blue_ok =
            covdec::coverage_at_least(inst.polygon, blue, inst.region, Closedness::Closed, 1,
                                      &witness);
        report["results"]["blue_covers"] = blue_ok;
        if (!blue_ok) report["results"]["blue_witness"] = covdec::point_to_json(witness);
        ok = red_ok && blue_ok;
    } else {
        const json& colors_json = with.contains("results") && with.at("results").contains("colors")
                                      ? with.at("results").at("colors")
                                      : with.at("colors");
        const std::map<Point, RBColor> rb = covdec::colors_from_json(colors_json);
        const auto violations = covdec::verify_coloring(f.points, f.polygon, rb, opt.m);
        json vj = json::array();
        for (const auto& v : violations) {
            json trace = json::array();
            for (const Point& p : v.trace) trace.push_back(covdec::point_to_json(p));
            vj.push_back(json{{"wedge", v.wedge_index},
                              {"apex", covdec::point_to_json(v.apex)},
                              {"trace", trace}});
        }
        report["results"]["violations"] = vj;
        ok = violations.empty();
    }
    emit(opt, report);
    return ok ? kExitOk : kExitViolations;
}

int cmd_check_claims(const Options& opt, const std::string& command) {
    const InstanceFile f = covdec::instance_from_json(covdec::read_json_file(opt.in_path));
    const covdec::ClaimReport claims =
        covdec::check_claims(f.points, f.polygon, closedness_from_flag(opt.closedness));
    json report = base_report(command);
    json rows = json::array();
    for (const auto& row : claims.rows)
        rows.push_back(json{{"claim", row.claim}, {"pass", row.pass}, {"detail", row.detail}});
    report["results"]["claims"] = rows;
    report["results"]["all_pass"] = claims.all_pass();
    emit(opt, report);
    return claims.all_pass() ? kExitOk : kExitViolations;
}

int cmd_render(const Options& opt) {
    const InstanceFile f = covdec::instance_from_json(covdec::read_json_file(opt.in_path));
    covdec::RenderSpec spec;
    spec.polygon = f.polygon;
    spec.region = f.region;
    if (f.kind == "covering") spec.translate_centers = f.points;
    else {
        spec.points = f.points;
        if (!f.points.empty())
            spec.boundary = covdec::assemble_cyclic(f.points, f.polygon,
                                                    closedness_from_flag(opt.closedness));
    }
    if (!opt.with_path.empty()) {
        const json with = covdec::read_json_file(opt.with_path);
        if (with.contains("results") && with.at("results").contains("colors"))
            spec.colors = covdec::colors_from_json(with.at("results").at("colors"));
        else if (with.contains("results") && with.at("results").contains("red_centers")) {
            for (const json& p : with.at("results").at("red_centers"))
                spec.colors[covdec::point_from_json(p)] = RBColor::Red;
            for (const json& p : with.at("results").at("blue_centers"))
                spec.colors[covdec::point_from_json(p)] = RBColor::Blue;
            spec.points = f.points;
        }
    }
    const std::string svg = covdec::render_svg(spec);
    if (opt.out_path.empty()) std::cout << svg;
    else covdec::write_file_atomic(opt.out_path, svg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cover-decomposition toolkit"};
    app.require_subcommand(1);
    Options opt;

    std::string command;
    {
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        command = cmd.str();
    }

    auto* gen = app.add_subcommand("gen", "generate a points or covering instance");
    gen->add_option("kind", opt.kind, "points|covering");
    gen->add_option("--polygon", opt.polygon_name, "square|hexagon|octagon or instance file");
    gen->add_option("--size", opt.size, "number of points");
    gen->add_option("--k", opt.fold, "fold target (covering; default 9*k')");
    gen->add_option("--region", opt.region_spec, "x_min,x_max,y_min,y_max");
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--out", opt.out_path, "output file");

    auto* color = app.add_subcommand("color", "red/blue coloring of an instance");
    color->add_option("--in", opt.in_path, "instance file")->required();
    color->add_option("--mode", opt.mode, "single|multi");
    color->add_option("--m", opt.m, "trace size threshold");
    color->add_option("--out", opt.out_path, "output file");

    auto* dec = app.add_subcommand("decompose", "split a covering into two coverings");
    dec->add_option("--in", opt.in_path, "covering instance file")->required();
    dec->add_option("--out", opt.out_path, "output file");

    auto* verify = app.add_subcommand("verify", "verify a coloring or decomposition");
    verify->add_option("--in", opt.in_path, "instance file")->required();
    verify->add_option("--with", opt.with_path, "coloring or decomposition report")->required();
    verify->add_option("--m", opt.m, "trace size threshold");
    verify->add_option("--out", opt.out_path, "output file");

    auto* claims = app.add_subcommand("check-claims", "run the structural claim suite");
    claims->add_option("--in", opt.in_path, "instance file")->required();
    claims->add_option("--closedness", opt.closedness, "closed|open");
    claims->add_option("--out", opt.out_path, "output file");

    auto* render = app.add_subcommand("render", "render an instance to SVG");
    render->add_option("--in", opt.in_path, "instance file")->required();
    render->add_option("--with", opt.with_path, "coloring or decomposition report");
    render->add_option("--closedness", opt.closedness, "closed|open");
    render->add_option("--out", opt.out_path, "output SVG file");

    app.add_option("--jobs", opt.jobs, "reserved; computations are deterministic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (color->parsed()) return cmd_color(opt, command);
        if (dec->parsed()) return cmd_decompose(opt, command);
        if (verify->parsed()) return cmd_verify(opt, command);
        if (claims->parsed()) return cmd_check_claims(opt, command);
        if (render->parsed()) return cmd_render(opt);
    } catch (const covdec::StructuralViolation& e) {
        std::cerr << "structural violation (bug trap): " << e.what() << "\n";
        return kExitStructural;
    } catch (const covdec::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitViolations;
    } catch (const covdec::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
