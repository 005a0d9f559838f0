#pragma once

#include <functional>
#include <string>
#include <vector>

#include "squarepeg/geometry.hpp"

namespace squarepeg {

/// Continuous nonnegative ground function supported on a body: zero outside,
/// nonnegative on it.
struct HeightField {
    ConvexBody body;
    std::function<double(const Point2&)> evaluate;
    std::string kind;  // tabletop | grid | user
};

/// The radial tabletop 1 - |x| / rho(x) on the body, 1 at the origin, 0
/// outside. Requires the origin strictly interior (center the body first);
/// its level set {f = y} is the scaled boundary (1-y) * dD for y in (0,1).
HeightField tabletop(const ConvexBody& body);

struct GridField {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
    int nx = 0, ny = 0;
    std::vector<double> heights;  // row-major, ny rows of nx values
};

/// Bilinear interpolant of a height grid covering the body's bounding box,
/// clamped to zero outside the body.
HeightField field_from_grid(const ConvexBody& body, const GridField& grid);

/// A Table Theorem solution: a square of the requested side whose four
/// vertices share a common field height y up to the residual.
struct LevelSquare {
    Square square;
    double y = 0.0;
    double residual = 0.0;  // max pairwise height difference at the vertices
    bool center_in_body = false;
    bool trivial = false;  // y at tolerance zero with every vertex non-interior
    int start_index = -1;  // which start of the deterministic ladder succeeded
};

struct TableSolveConfig {
    int start_grid = 5;       // start centers: centroid + start_grid^2 interior lattice
    int start_rotations = 8;  // rotations per lattice start
    int max_iters = 600;
    int restarts = 10;        // simplex re-seeds around the incumbent per start
    double level_tol = 1e-8;
    bool reject_trivial = false;
};

/// Multi-start derivative-free minimization of E(c, alpha) =
/// sum_i (f(a_i) - mean)^2 over square centers in the body and rotations in
/// [0, pi/2). Accepts the first start whose residual meets level_tol.
/// Throws NoSolutionFound when the budget is exhausted.
LevelSquare solve_table(const HeightField& field, double s, TableSolveConfig cfg = {});

}  // namespace squarepeg
