#pragma once

#include <string>
#include <variant>
#include <vector>

#include "squarepeg/geometry.hpp"

namespace squarepeg {

struct PolygonSpec {
    std::vector<Point2> vertices;
};
struct RegularNgonSpec {
    int n = 3;
    double circumradius = 1.0;
};
struct EllipseSpec {
    double a = 1.0;
    double b = 1.0;
    int samples = 256;
};
struct DiskSpec {
    double radius = 1.0;
    int samples = 256;
};

using ShapeSpec = std::variant<PolygonSpec, RegularNgonSpec, EllipseSpec, DiskSpec>;

ConvexBody make_body(const ShapeSpec& spec);

ConvexBody make_polygon(std::vector<Point2> vertices);
ConvexBody make_regular_ngon(int n, double circumradius);
ConvexBody make_ellipse(double a, double b, int samples);
ConvexBody make_disk(double radius, int samples);

/// Parses the shape JSON schema:
///   {"kind":"polygon","vertices":[[x,y],...]}
///   {"kind":"regular_ngon","n":5,"circumradius":1.0}
///   {"kind":"ellipse","a":2.0,"b":1.0,"samples":512}
///   {"kind":"disk","radius":1.0,"samples":512}
/// Throws ShapeParseError with a field diagnostic on malformed input.
ShapeSpec parse_shape_json(const std::string& text);

/// Inverse of parse_shape_json, used for the report's input echo.
std::string shape_to_json(const ShapeSpec& spec);

}  // namespace squarepeg
