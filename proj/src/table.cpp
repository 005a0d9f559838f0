#include "squarepeg/table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "squarepeg/nelder_mead.hpp"

namespace squarepeg {

HeightField tabletop(const ConvexBody& body) {
    if (classify_point(body, Point2{0.0, 0.0}) != PointClass::Interior)
        throw OriginNotInterior("tabletop: center the body on the origin first");
    const double tiny = 1e-15 * body.diameter();
    HeightField field{body, {}, "tabletop"};
    field.evaluate = [body, tiny](const Point2& p) -> double {
        if (classify_point(body, p) == PointClass::Exterior) return 0.0;
        const double r = norm(p);
        if (r <= tiny) return 1.0;
        const double rho = radial_scale(body, p / r);
        return std::clamp(1.0 - r / rho, 0.0, 1.0);
    };
    return field;
}

HeightField field_from_grid(const ConvexBody& body, const GridField& grid) {
    if (grid.nx < 2 || grid.ny < 2) throw GridTooSmall("grid field needs nx, ny >= 2");
    if (static_cast<std::size_t>(grid.nx) * grid.ny != grid.heights.size())
        throw GridTooSmall("grid field: heights size does not match nx * ny");
    const BoundingBox bb = body.bbox();
    if (grid.xmin > bb.xmin || grid.ymin > bb.ymin || grid.xmax < bb.xmax || grid.ymax < bb.ymax)
        throw GridTooSmall("grid field must cover the body's bounding box");
    for (double h : grid.heights)
        if (h < 0.0) throw NegativeHeight("grid field heights must be nonnegative");

    HeightField field{body, {}, "grid"};
    field.evaluate = [body, grid](const Point2& p) -> double {
        if (classify_point(body, p) == PointClass::Exterior) return 0.0;
        const double fx = (p.x - grid.xmin) / (grid.xmax - grid.xmin) * (grid.nx - 1);
        const double fy = (p.y - grid.ymin) / (grid.ymax - grid.ymin) * (grid.ny - 1);
        const int i = std::clamp(static_cast<int>(fx), 0, grid.nx - 2);
        const int j = std::clamp(static_cast<int>(fy), 0, grid.ny - 2);
        const double tx = std::clamp(fx - i, 0.0, 1.0);
        const double ty = std::clamp(fy - j, 0.0, 1.0);
        auto at = [&](int ii, int jj) { return grid.heights[jj * grid.nx + ii]; };
        const double v = (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
                         (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
        return v;
    };
    return field;
}

namespace {

struct Heights {
    std::array<double, 4> h;
    double mean = 0.0;
    double residual = 0.0;
};

Heights eval_heights(const HeightField& field, const Square& sq) {
    Heights out;
    const auto verts = square_vertices(sq);
    out.mean = 0.0;
    for (int k = 0; k < 4; ++k) {
        out.h[k] = field.evaluate(verts[k]);
        out.mean += out.h[k];
    }
    out.mean /= 4.0;
    double lo = out.h[0], hi = out.h[0];
    for (int k = 1; k < 4; ++k) {
        lo = std::min(lo, out.h[k]);
        hi = std::max(hi, out.h[k]);
    }
    out.residual = hi - lo;
    return out;
}

}  // namespace

LevelSquare solve_table(const HeightField& field, double s, TableSolveConfig cfg) {
    if (!(s > 0.0)) throw InvalidSide("solve_table: side must be > 0");
    const ConvexBody& body = field.body;
    const double diam = body.diameter();

    auto energy = [&](const std::vector<double>& p) -> double {
        const Square sq{{p[0], p[1]}, s, p[2]};
        const Heights hh = eval_heights(field, sq);
        double e = 0.0;
        for (int k = 0; k < 4; ++k) e += (hh.h[k] - hh.mean) * (hh.h[k] - hh.mean);
        // keep the center in the body
        const Point2 c{p[0], p[1]};
        if (classify_point(body, c) == PointClass::Exterior) {
            const double d = distance_to_boundary(body, c) / diam;
            e += d * d + 1e-6;
        }
        return e;
    };

    auto assemble = [&](const std::vector<double>& p, int start_index) -> LevelSquare {
        LevelSquare ls;
        ls.square = Square{{p[0], p[1]}, s, wrap_quarter(p[2])};
        const Heights hh = eval_heights(field, ls.square);
        ls.y = hh.mean;
        ls.residual = hh.residual;
        ls.center_in_body = classify_point(body, ls.square.center) != PointClass::Exterior;
        ls.trivial = ls.y <= cfg.level_tol;
        if (ls.trivial)
            for (const Point2& v : square_vertices(ls.square))
                if (classify_point(body, v) == PointClass::Interior) ls.trivial = false;
        ls.start_index = start_index;
        return ls;
    };

    std::vector<std::vector<double>> starts;
    starts.push_back({body.centroid().x, body.centroid().y, 0.0});
    const BoundingBox bb = body.bbox();
    for (int i = 0; i < cfg.start_grid; ++i)
        for (int j = 0; j < cfg.start_grid; ++j) {
            const Point2 p{bb.xmin + (i + 0.5) * (bb.xmax - bb.xmin) / cfg.start_grid,
                           bb.ymin + (j + 0.5) * (bb.ymax - bb.ymin) / cfg.start_grid};
            if (classify_point(body, p) != PointClass::Interior) continue;
            for (int r = 0; r < cfg.start_rotations; ++r)
                starts.push_back({p.x, p.y, (kPi / 2.0) * r / cfg.start_rotations});
        }

    double best_residual = std::numeric_limits<double>::infinity();
    const double target = 0.1 * cfg.level_tol * cfg.level_tol;

    for (std::size_t si = 0; si < starts.size(); ++si) {
        // accept a start in place when it already sits on a level square;
        // this keeps symmetric solutions exactly on their symmetry axis
        LevelSquare direct = assemble(starts[si], static_cast<int>(si));
        if (direct.residual <= cfg.level_tol && direct.center_in_body) {
            if (!(cfg.reject_trivial && direct.trivial)) return direct;
            continue;
        }

        std::vector<double> x = starts[si];
        std::vector<double> scale{0.05 * diam, 0.05 * diam, 0.05};
        double val = energy(x);
        for (int round = 0; round < cfg.restarts; ++round) {
            NelderMeadResult nm = nelder_mead(energy, x, scale, cfg.max_iters, target);
            if (nm.value < val) {
                x = nm.x;
                val = nm.value;
            }
            if (val <= target) break;
            for (double& sc : scale) sc *= 0.1;
        }
        LevelSquare ls = assemble(x, static_cast<int>(si));
        if (ls.residual <= cfg.level_tol && ls.center_in_body) {
            if (cfg.reject_trivial && ls.trivial) continue;
            return ls;
        }
        best_residual = std::min(best_residual, ls.residual);
    }
    throw NoSolutionFound("solve_table: no level square within tolerance after " +
                          std::to_string(starts.size()) +
                          " starts; best residual = " + std::to_string(best_residual));
}

}  // namespace squarepeg
