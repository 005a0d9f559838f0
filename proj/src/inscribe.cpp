#include "squarepeg/inscribe.hpp"

#include <algorithm>
#include <cmath>

#include "squarepeg/nelder_mead.hpp"
#include "squarepeg/obtuseness.hpp"

namespace squarepeg {

InscribedSquareResult inscribe_via_table(const ConvexBody& body, InscribeConfig cfg) {
    const ObtusenessReport rep = is_obtuse(body, cfg.delta, cfg.boundary_samples);
    if (!rep.obtuse) throw NotObtuse("inscribe_via_table: body is not obtuse");

    const Point2 shift = body.centroid();
    const ConvexBody centered = body.translated(-shift);

    const double sstar = s_star(centered, cfg.delta, cfg.grid);
    const double d = cfg.safety * sstar;
    if (!(d > 0.0)) throw NoSolutionFound("inscribe_via_table: nontriviality threshold is zero");

    const HeightField field = tabletop(centered);
    TableSolveConfig solver = cfg.solver;
    solver.reject_trivial = true;
    const LevelSquare ls = solve_table(field, d, solver);

    const double y = ls.y;
    if (!(y > solver.level_tol) || !(y < 1.0 - solver.level_tol))
        throw DegenerateY("inscribe_via_table: common height outside (0,1)");

    const double scale = 1.0 / (1.0 - y);
    InscribedSquareResult out;
    out.method = "table_pipeline";
    out.square = Square{ls.square.center * scale + shift, d * scale, ls.square.rotation};
    out.trace = {sstar, d, y, ls.residual};
    out.max_boundary_distance = 0.0;
    for (const Point2& v : square_vertices(out.square))
        out.max_boundary_distance = std::max(out.max_boundary_distance, distance_to_boundary(body, v));
    return out;
}

namespace {

double vertex_misfit(const ConvexBody& body, const Square& sq) {
    double f = 0.0;
    for (const Point2& v : square_vertices(sq)) {
        const double d = distance_to_boundary(body, v);
        f += d * d;
    }
    return f;
}

Square refine_square(const ConvexBody& body, Square sq) {
    auto objective = [&](const std::vector<double>& p) {
        return vertex_misfit(body, Square{{p[0], p[1]}, std::abs(p[2]), p[3]});
    };
    const double h = 0.01 * body.diameter();
    std::vector<double> x0{sq.center.x, sq.center.y, sq.side, sq.rotation};
    NelderMeadResult nm = nelder_mead(objective, x0, {h, h, h, 0.02}, 300, 1e-24);
    return Square{{nm.x[0], nm.x[1]}, std::abs(nm.x[2]), wrap_quarter(nm.x[3])};
}

double rotation_distance(double a, double b) {
    double d = std::abs(wrap_quarter(a) - wrap_quarter(b));
    return std::min(d, kPi / 2.0 - d);
}

}  // namespace

std::vector<Square> oracle_inscribed_squares(const ConvexBody& body, int n_boundary, double eps) {
    n_boundary = std::max(n_boundary, 32);
    const std::vector<Point2> samples = body.boundary_points(n_boundary);
    // candidates must survive the sampling resolution of the boundary walk
    const double coarse = std::max(eps, 2.0 * body.perimeter() / n_boundary);

    std::vector<Square> out;
    for (int i = 0; i < n_boundary; ++i) {
        for (int j = i + 1; j < n_boundary; ++j) {
            const Point2 p = samples[i], q = samples[j];
            const Point2 m = (p + q) * 0.5;
            const Point2 h = rot90(q - p) * 0.5;
            const double side = norm(q - p) / std::numbers::sqrt2;
            if (side <= 4.0 * eps) continue;
            if (distance_to_boundary(body, m + h) > coarse) continue;
            if (distance_to_boundary(body, m - h) > coarse) continue;

            Square sq = refine_square(body, square_from_vertices({p, m - h, q, m + h}));
            if (sq.side <= 4.0 * eps) continue;
            if (std::sqrt(vertex_misfit(body, sq) / 4.0) > eps) continue;

            bool dup = false;
            for (const Square& other : out) {
                if (dist(sq.center, other.center) <= eps && std::abs(sq.side - other.side) <= eps &&
                    rotation_distance(sq.rotation, other.rotation) <= eps) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(sq);
        }
    }
    return out;
}

InscribedReport verify_inscribed(const ConvexBody& body, const Square& sq, double eps) {
    InscribedReport rep;
    const auto v = square_vertices(sq);
    for (const Point2& p : v)
        rep.max_boundary_distance = std::max(rep.max_boundary_distance, distance_to_boundary(body, p));
    for (int k = 0; k < 4; ++k)
        rep.side_spread = std::max(rep.side_spread, std::abs(dist(v[k], v[(k + 1) % 4]) - sq.side));
    const Point2 d1 = v[2] - v[0], d2 = v[3] - v[1];
    rep.diagonal_orthogonality_error = std::abs(dot(d1, d2)) / (norm(d1) * norm(d2));
    const double rel = 1e-9 * std::max(sq.side, body.diameter());
    rep.pass = rep.max_boundary_distance <= eps && rep.side_spread <= rel &&
               rep.diagonal_orthogonality_error <= 1e-9;
    return rep;
}

}  // namespace squarepeg
