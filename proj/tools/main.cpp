#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "squarepeg/inscribe.hpp"
#include "squarepeg/obtuseness.hpp"
#include "squarepeg/shapes.hpp"
#include "squarepeg/table.hpp"
#include "squarepeg/triviality.hpp"
#include "svg.hpp"

namespace {

using namespace squarepeg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitTheory = 3;
constexpr int kExitNumerical = 4;

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

ShapeSpec load_shape(const std::string& inline_json, const std::string& path) {
    if (!inline_json.empty()) return parse_shape_json(inline_json);
    if (path.empty()) throw ShapeParseError("no shape given: use --shape or --shape-json");
    std::ifstream in(path);
    if (!in) throw ShapeParseError("cannot open shape file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_shape_json(ss.str());
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

Point2 parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ShapeParseError("--point expects \"x,y\"");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ShapeParseError("--point expects numeric \"x,y\"");
    }
}

GridField load_grid_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ShapeParseError("cannot open field file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ShapeParseError(std::string("field: invalid JSON: ") + e.what());
    }
    GridField g;
    try {
        g.xmin = j.at("xmin").get<double>();
        g.ymin = j.at("ymin").get<double>();
        g.xmax = j.at("xmax").get<double>();
        g.ymax = j.at("ymax").get<double>();
        g.nx = j.at("nx").get<int>();
        g.ny = j.at("ny").get<int>();
        g.heights = j.at("heights").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ShapeParseError(std::string("field: bad schema: ") + e.what());
    }
    return g;
}

int run_analyze(const ShapeSpec& spec, double delta, int grid, int boundary_samples,
                const std::string& out_path) {
    Clock clock;
    const ConvexBody body = make_body(spec);
    const ObtusenessReport rep = is_obtuse(body, delta, boundary_samples);
    const double sstar = s_star(body.translated(-body.centroid()), delta, grid);

    json j;
    j["command"] = "analyze";
    j["input"] = json::parse(shape_to_json(spec));
    j["config"] = {{"delta", delta}, {"grid", grid}, {"boundary_samples", boundary_samples}};
    j["obtuseness"] = report::to_json(rep, true);
    j["s_star"] = sstar;
    j["timing"] = {{"seconds", clock.seconds()}};
    emit(j, out_path);
    return kExitOk;
}

int run_inscribe(const ShapeSpec& spec, const std::string& method, double eps, int n_boundary,
                 double delta, int grid, double safety, const std::string& svg_path,
                 const std::string& out_path) {
    Clock clock;
    const ConvexBody body = make_body(spec);
    json j;
    j["command"] = "inscribe";
    j["input"] = json::parse(shape_to_json(spec));
    j["config"] = {{"method", method}, {"eps", eps},       {"n_boundary", n_boundary},
                   {"delta", delta},   {"grid", grid},     {"safety", safety}};

    std::optional<InscribedSquareResult> table_result;
    if (method == "table" || method == "both") {
        InscribeConfig cfg;
        cfg.delta = delta;
        cfg.grid = grid;
        cfg.safety = safety;
        try {
            table_result = inscribe_via_table(body, cfg);
        } catch (const NotObtuse&) {
            if (method == "table") throw;
            j["table"] = {{"error", "NotObtuse"},
                          {"hint", "body is not obtuse; the oracle result below still applies"}};
        }
        if (table_result) {
            j["table"] = report::to_json(*table_result);
            j["table"]["verification"] =
                report::to_json(verify_inscribed(body, table_result->square, eps));
        }
    }

    std::vector<Square> oracle;
    if (method == "oracle" || method == "both") {
        oracle = oracle_inscribed_squares(body, n_boundary, eps);
        auto arr = json::array();
        for (const Square& sq : oracle) {
            json e = report::to_json(sq);
            e["verification"] = report::to_json(verify_inscribed(body, sq, eps));
            arr.push_back(e);
        }
        j["oracle"] = {{"count", oracle.size()}, {"squares", arr}};
    }
    j["timing"] = {{"seconds", clock.seconds()}};

    if (!svg_path.empty()) {
        svg::Figure fig(body);
        if (table_result) {
            // intermediate level square (before rescaling), in the input frame
            const double y = table_result->trace.y;
            Square level = table_result->square;
            const Point2 shift = body.centroid();
            level.center = (level.center - shift) * (1.0 - y) + shift;
            level.side *= 1.0 - y;
            fig.add_square(level, "#1f77b4", "level square (b1..b4)");
            fig.add_square(table_result->square, "#d62728", "inscribed square (a1..a4)");
        }
        for (std::size_t i = 0; i < oracle.size() && i < 8; ++i)
            fig.add_square(oracle[i], "#2ca02c", i == 0 ? "oracle squares" : "");
        fig.write(svg_path);
        j["svg"] = svg_path;
    }
    emit(j, out_path);
    return kExitOk;
}

int run_table(const ShapeSpec& spec, const std::string& field_path, double side,
              const std::string& out_path) {
    Clock clock;
    const ConvexBody body = make_body(spec);
    json j;
    j["command"] = "table";
    j["input"] = json::parse(shape_to_json(spec));
    j["config"] = {{"side", side}, {"field", field_path.empty() ? "tabletop" : field_path}};

    Point2 shift{0.0, 0.0};
    const bool use_tabletop = field_path.empty();
    if (use_tabletop) shift = body.centroid();
    const HeightField field = use_tabletop
                                  ? tabletop(body.translated(-shift))
                                  : field_from_grid(body, load_grid_field(field_path));
    if (use_tabletop) j["centroid_shift"] = report::to_json(shift);
    const LevelSquare ls = solve_table(field, side);
    json jls = report::to_json(ls);
    if (field_path.empty()) {
        Square in_input_frame = ls.square;
        in_input_frame.center = in_input_frame.center + shift;
        jls["square_in_input_frame"] = report::to_json(in_input_frame);
    }
    j["level_square"] = jls;
    j["timing"] = {{"seconds", clock.seconds()}};
    emit(j, out_path);
    return kExitOk;
}

int run_witness(const ShapeSpec& spec, const std::string& point_text, bool auto_point, double side,
                const std::string& out_path) {
    Clock clock;
    const ConvexBody body = make_body(spec);

    Point2 x;
    if (auto_point) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < body.size(); ++i)
            if (body.interior_angle(i) < body.interior_angle(best)) best = i;
        x = body.vertices()[best];
    } else {
        if (point_text.empty()) throw ShapeParseError("witness: give --point \"x,y\" or --auto");
        x = parse_point(point_text);
    }

    const DirectionArc arc = direction_arc(body, x);
    const Square sq = trivial_square_at(body, x, side);
    const bool verified = verify_trivial_square(body, sq, side);

    json j;
    j["command"] = "witness";
    j["input"] = json::parse(shape_to_json(spec));
    j["config"] = {{"side", side}, {"auto", auto_point}};
    j["point"] = report::to_json(x);
    j["direction_arc"] = report::to_json(arc);
    j["witness"] = report::to_json(sq);
    j["verified"] = verified;
    j["timing"] = {{"seconds", clock.seconds()}};
    emit(j, out_path);
    return verified ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarepeg: inscribed squares in convex curves via the table construction"};
    app.require_subcommand(1);

    std::string shape_json, shape_path, out_path, svg_path;

    auto add_shape_opts = [&](CLI::App* cmd) {
        cmd->add_option("--shape", shape_json, "inline shape JSON");
        cmd->add_option("--shape-json", shape_path, "path to a shape JSON file");
        cmd->add_option("--out", out_path, "write the JSON report here (default: stdout)");
    };

    double delta = 1e-3, eps = 1e-2, safety = 0.9, side = 1.0;
    int grid = 64, boundary_samples = 64, n_boundary = 360;
    std::string method = "table", field_path, point_text;
    bool auto_point = false;

    CLI::App* analyze = app.add_subcommand("analyze", "obtuseness verdict and s*");
    add_shape_opts(analyze);
    analyze->add_option("--delta", delta, "sector angle margin over pi/2");
    analyze->add_option("--grid", grid, "s* lattice resolution");
    analyze->add_option("--boundary-samples", boundary_samples, "boundary probe count");

    CLI::App* inscribe = app.add_subcommand("inscribe", "find an inscribed square");
    add_shape_opts(inscribe);
    inscribe->add_option("--method", method, "table | oracle | both")
        ->check(CLI::IsMember({"table", "oracle", "both"}));
    inscribe->add_option("--eps", eps, "oracle boundary tolerance");
    inscribe->add_option("--n-boundary", n_boundary, "oracle boundary samples");
    inscribe->add_option("--delta", delta, "sector angle margin over pi/2");
    inscribe->add_option("--grid", grid, "s* lattice resolution");
    inscribe->add_option("--safety", safety, "d = safety * s*");
    inscribe->add_option("--svg", svg_path, "write an SVG figure here");

    CLI::App* table = app.add_subcommand("table", "solve the level-square problem");
    add_shape_opts(table);
    table->add_option("--side", side, "square side length")->required();
    table->add_option("--field", field_path, "grid field JSON (default: tabletop)");

    CLI::App* witness = app.add_subcommand("witness", "trivial square at a boundary point");
    add_shape_opts(witness);
    witness->add_option("--point", point_text, "boundary point \"x,y\"");
    witness->add_flag("--auto", auto_point, "use the minimum-angle vertex");
    witness->add_option("--side", side, "witness side length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        const ShapeSpec spec = load_shape(shape_json, shape_path);
        if (analyze->parsed()) return run_analyze(spec, delta, grid, boundary_samples, out_path);
        if (inscribe->parsed())
            return run_inscribe(spec, method, eps, n_boundary, delta, grid, safety, svg_path,
                                out_path);
        if (table->parsed()) return run_table(spec, field_path, side, out_path);
        if (witness->parsed()) return run_witness(spec, point_text, auto_point, side, out_path);
    } catch (const ShapeParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotObtuse& e) {
        std::cerr << "error: " << e.what() << " (try --method oracle)\n";
        return kExitTheory;
    } catch (const ArcTooWide& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTheory;
    } catch (const NotBoundaryPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTheory;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
