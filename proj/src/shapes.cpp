#include "squarepeg/shapes.hpp"

#include <cmath>

#include <json.hpp>

namespace squarepeg {

using nlohmann::json;

ConvexBody make_polygon(std::vector<Point2> vertices) {
    return ConvexBody::from_points(std::move(vertices), "polygon");
}

ConvexBody make_regular_ngon(int n, double circumradius) {
    if (n < 3) throw ShapeParseError("regular_ngon: n must be >= 3");
    if (circumradius <= 0.0) throw ShapeParseError("regular_ngon: circumradius must be > 0");
    std::vector<Point2> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * k / n;
        pts.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
    }
    return ConvexBody::from_points(std::move(pts), "regular_ngon");
}

ConvexBody make_ellipse(double a, double b, int samples) {
    if (a <= 0.0 || b <= 0.0) throw ShapeParseError("ellipse: semi-axes must be > 0");
    if (samples < 32) throw ShapeParseError("ellipse: samples must be >= 32");
    std::vector<Point2> pts;
    pts.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * kPi * k / samples;
        pts.push_back({a * std::cos(t), b * std::sin(t)});
    }
    return ConvexBody::from_points(std::move(pts), "ellipse-sampled");
}

ConvexBody make_disk(double radius, int samples) {
    if (radius <= 0.0) throw ShapeParseError("disk: radius must be > 0");
    if (samples < 32) throw ShapeParseError("disk: samples must be >= 32");
    std::vector<Point2> pts;
    pts.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * kPi * k / samples;
        pts.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return ConvexBody::from_points(std::move(pts), "disk-sampled");
}

ConvexBody make_body(const ShapeSpec& spec) {
    return std::visit(
        [](const auto& s) -> ConvexBody {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PolygonSpec>)
                return make_polygon(s.vertices);
            else if constexpr (std::is_same_v<T, RegularNgonSpec>)
                return make_regular_ngon(s.n, s.circumradius);
            else if constexpr (std::is_same_v<T, EllipseSpec>)
                return make_ellipse(s.a, s.b, s.samples);
            else
                return make_disk(s.radius, s.samples);
        },
        spec);
}

namespace {

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ShapeParseError(std::string("shape: missing or non-numeric field '") + field + "'");
    return j[field].get<double>();
}

int require_int(const json& j, const char* field, int fallback) {
    if (!j.contains(field)) return fallback;
    if (!j[field].is_number_integer())
        throw ShapeParseError(std::string("shape: field '") + field + "' must be an integer");
    return j[field].get<int>();
}

}  // namespace

ShapeSpec parse_shape_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ShapeParseError(std::string("shape: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ShapeParseError("shape: expected an object with a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw ShapeParseError("shape: polygon requires an array field 'vertices'");
        PolygonSpec s;
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ShapeParseError("shape: each vertex must be a [x, y] number pair");
            s.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        if (s.vertices.size() < 3) throw ShapeParseError("shape: polygon needs >= 3 vertices");
        return s;
    }
    if (kind == "regular_ngon") {
        RegularNgonSpec s;
        s.n = require_int(j, "n", -1);
        if (s.n < 3) throw ShapeParseError("shape: regular_ngon requires integer 'n' >= 3");
        s.circumradius = require_number(j, "circumradius");
        return s;
    }
    if (kind == "ellipse") {
        EllipseSpec s;
        s.a = require_number(j, "a");
        s.b = require_number(j, "b");
        s.samples = require_int(j, "samples", 256);
        return s;
    }
    if (kind == "disk") {
        DiskSpec s;
        s.radius = require_number(j, "radius");
        s.samples = require_int(j, "samples", 256);
        return s;
    }
    throw ShapeParseError("shape: unknown kind '" + kind + "'");
}

std::string shape_to_json(const ShapeSpec& spec) {
    json j;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PolygonSpec>) {
                j["kind"] = "polygon";
                auto arr = json::array();
                for (const auto& v : s.vertices) arr.push_back({v.x, v.y});
                j["vertices"] = arr;
            } else if constexpr (std::is_same_v<T, RegularNgonSpec>) {
                j["kind"] = "regular_ngon";
                j["n"] = s.n;
                j["circumradius"] = s.circumradius;
            } else if constexpr (std::is_same_v<T, EllipseSpec>) {
                j["kind"] = "ellipse";
                j["a"] = s.a;
                j["b"] = s.b;
                j["samples"] = s.samples;
            } else {
                j["kind"] = "disk";
                j["radius"] = s.radius;
                j["samples"] = s.samples;
            }
        },
        spec);
    return j.dump();
}

}  // namespace squarepeg
