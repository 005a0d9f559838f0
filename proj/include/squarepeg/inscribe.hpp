#pragma once

#include <string>
#include <vector>

#include "squarepeg/geometry.hpp"
#include "squarepeg/table.hpp"

namespace squarepeg {

struct PipelineTrace {
    double s_star_used = 0.0;
    double d_used = 0.0;
    double y = 0.0;
    double residual = 0.0;
};

struct InscribedSquareResult {
    Square square;
    double max_boundary_distance = 0.0;
    PipelineTrace trace;
    std::string method;  // table_pipeline | oracle
};

struct InscribeConfig {
    double delta = 1e-3;
    int grid = 64;
    int boundary_samples = 64;
    double safety = 0.9;  // d = safety * s_star
    TableSolveConfig solver;
};

/// The table pipeline: center the body, compute the nontriviality threshold
/// s*, solve the tabletop Table Theorem at side d = safety * s* (rejecting
/// trivial solutions), and rescale the level square by 1/(1-y) onto the
/// boundary. Requires an obtuse body.
InscribedSquareResult inscribe_via_table(const ConvexBody& body, InscribeConfig cfg = {});

/// Brute-force inscribed-square search: every ordered pair of boundary
/// samples is taken as a candidate diagonal, the two remaining vertices are
/// closed rigidly, candidates near the boundary are polished by local descent
/// on the summed squared vertex-to-boundary distance, and near-duplicates
/// are merged.
std::vector<Square> oracle_inscribed_squares(const ConvexBody& body, int n_boundary = 360,
                                             double eps = 1e-2);

struct InscribedReport {
    double max_boundary_distance = 0.0;
    double side_spread = 0.0;
    double diagonal_orthogonality_error = 0.0;
    bool pass = false;
};

InscribedReport verify_inscribed(const ConvexBody& body, const Square& sq, double eps);

}  // namespace squarepeg
