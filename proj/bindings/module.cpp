#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "squarepeg/inscribe.hpp"
#include "squarepeg/obtuseness.hpp"
#include "squarepeg/shapes.hpp"
#include "squarepeg/table.hpp"
#include "squarepeg/triviality.hpp"

namespace py = pybind11;
using namespace squarepeg;

namespace {

py::dict square_dict(const Square& sq) {
    py::dict d;
    d["center"] = py::make_tuple(sq.center.x, sq.center.y);
    d["side"] = sq.side;
    d["rotation"] = sq.rotation;
    py::list verts;
    for (const Point2& v : square_vertices(sq)) verts.append(py::make_tuple(v.x, v.y));
    d["vertices"] = verts;
    return d;
}

Point2 as_point(const std::pair<double, double>& p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inscribed squares in convex curves via the table construction";

    py::class_<ConvexBody>(m, "ConvexBody")
        .def_property_readonly("vertices",
                               [](const ConvexBody& b) {
                                   py::list out;
                                   for (const Point2& v : b.vertices())
                                       out.append(py::make_tuple(v.x, v.y));
                                   return out;
                               })
        .def_property_readonly("provenance", &ConvexBody::provenance)
        .def_property_readonly("area", &ConvexBody::area)
        .def_property_readonly("diameter", &ConvexBody::diameter)
        .def_property_readonly("perimeter", &ConvexBody::perimeter)
        .def_property_readonly("centroid",
                               [](const ConvexBody& b) {
                                   return py::make_tuple(b.centroid().x, b.centroid().y);
                               })
        .def("translated",
             [](const ConvexBody& b, double tx, double ty) { return b.translated({tx, ty}); })
        .def("scaled", &ConvexBody::scaled)
        .def("__len__", &ConvexBody::size)
        .def("__repr__", [](const ConvexBody& b) {
            return "<ConvexBody " + b.provenance() + " n=" + std::to_string(b.size()) + ">";
        });

    m.def("make_polygon", [](const std::vector<std::pair<double, double>>& pts) {
        std::vector<Point2> v;
        for (const auto& p : pts) v.push_back(as_point(p));
        return make_polygon(std::move(v));
    });
    m.def("make_regular_ngon", &make_regular_ngon, py::arg("n"), py::arg("circumradius") = 1.0);
    m.def("make_ellipse", &make_ellipse, py::arg("a"), py::arg("b"), py::arg("samples") = 256);
    m.def("make_disk", &make_disk, py::arg("radius") = 1.0, py::arg("samples") = 256);

    m.def(
        "classify_point",
        [](const ConvexBody& b, double x, double y, double tol) {
            return std::string(to_string(classify_point(b, {x, y}, tol)));
        },
        py::arg("body"), py::arg("x"), py::arg("y"), py::arg("tol") = -1.0);

    m.def(
        "f_delta",
        [](const ConvexBody& b, double x, double y, double delta, int dir_samples) {
            const FDeltaResult r = f_delta(b, {x, y}, delta, dir_samples);
            py::object cert = py::none();
            if (r.best) {
                py::dict d;
                d["apex"] = py::make_tuple(r.best->apex.x, r.best->apex.y);
                d["v"] = py::make_tuple(r.best->v.x, r.best->v.y);
                d["theta"] = r.best->theta;
                d["delta"] = r.best->delta;
                cert = d;
            }
            return py::make_tuple(r.value, cert);
        },
        py::arg("body"), py::arg("x"), py::arg("y"), py::arg("delta") = 1e-3,
        py::arg("dir_samples") = 64);

    m.def(
        "is_obtuse",
        [](const ConvexBody& b, double delta, int boundary_samples) {
            const ObtusenessReport r = is_obtuse(b, delta, boundary_samples);
            py::dict d;
            d["obtuse"] = r.obtuse;
            d["angle_criterion"] = r.angle_criterion;
            d["disagreement"] = r.disagreement;
            d["min_interior_angle"] = r.min_interior_angle;
            d["worst_point"] = py::make_tuple(r.worst_point.x, r.worst_point.y);
            d["worst_value"] = r.worst_value;
            return d;
        },
        py::arg("body"), py::arg("delta") = 1e-3, py::arg("boundary_samples") = 64);

    m.def("s_star",
          [](const ConvexBody& b, double delta, int grid) { return s_star(b, delta, grid); },
          py::arg("body"), py::arg("delta") = 1e-3, py::arg("grid") = 64);

    m.def(
        "find_trivial_square",
        [](const ConvexBody& b, double s) {
            const TrivialityVerdict v = find_trivial_square(b, s);
            py::dict d;
            d["s"] = v.s;
            d["trivial"] = v.trivial;
            d["grid"] = v.grid;
            d["witness"] = v.witness ? py::object(square_dict(*v.witness)) : py::none();
            return d;
        },
        py::arg("body"), py::arg("s"));

    m.def(
        "trivial_square_at",
        [](const ConvexBody& b, double x, double y, double s) {
            return square_dict(trivial_square_at(b, {x, y}, s));
        },
        py::arg("body"), py::arg("x"), py::arg("y"), py::arg("s"));

    m.def(
        "direction_arc",
        [](const ConvexBody& b, double x, double y) {
            const DirectionArc a = direction_arc(b, {x, y});
            py::dict d;
            d["phi"] = a.phi;
            d["psi"] = a.psi;
            d["width"] = a.width();
            d["samples_consistent"] = a.samples_consistent;
            return d;
        },
        py::arg("body"), py::arg("x"), py::arg("y"));

    m.def(
        "solve_table_tabletop",
        [](const ConvexBody& b, double side) {
            const Point2 shift = b.centroid();
            const LevelSquare ls = solve_table(tabletop(b.translated(-shift)), side);
            py::dict d;
            d["square"] = square_dict(ls.square);
            d["y"] = ls.y;
            d["residual"] = ls.residual;
            d["trivial"] = ls.trivial;
            d["centroid_shift"] = py::make_tuple(shift.x, shift.y);
            return d;
        },
        py::arg("body"), py::arg("side"));

    m.def(
        "inscribe_via_table",
        [](const ConvexBody& b) {
            const InscribedSquareResult r = inscribe_via_table(b);
            py::dict d;
            d["square"] = square_dict(r.square);
            d["max_boundary_distance"] = r.max_boundary_distance;
            d["s_star_used"] = r.trace.s_star_used;
            d["d_used"] = r.trace.d_used;
            d["y"] = r.trace.y;
            d["residual"] = r.trace.residual;
            return d;
        },
        py::arg("body"));

    m.def(
        "oracle_inscribed_squares",
        [](const ConvexBody& b, int n_boundary, double eps) {
            py::list out;
            for (const Square& sq : oracle_inscribed_squares(b, n_boundary, eps))
                out.append(square_dict(sq));
            return out;
        },
        py::arg("body"), py::arg("n_boundary") = 360, py::arg("eps") = 1e-2);

    m.def(
        "verify_inscribed",
        [](const ConvexBody& b, double cx, double cy, double side, double rotation, double eps) {
            const InscribedReport r = verify_inscribed(b, Square{{cx, cy}, side, rotation}, eps);
            py::dict d;
            d["max_boundary_distance"] = r.max_boundary_distance;
            d["side_spread"] = r.side_spread;
            d["diagonal_orthogonality_error"] = r.diagonal_orthogonality_error;
            d["pass"] = r.pass;
            return d;
        },
        py::arg("body"), py::arg("cx"), py::arg("cy"), py::arg("side"), py::arg("rotation"),
        py::arg("eps"));

    // translators run newest-first, so the base goes in before the subclasses
    auto base = py::register_exception<Error>(m, "SquarepegError");
    py::register_exception<NotObtuse>(m, "NotObtuseError", base);
    py::register_exception<ArcTooWide>(m, "ArcTooWideError", base);
    py::register_exception<NoSolutionFound>(m, "NoSolutionFoundError", base);
}
