#pragma once

#include <optional>
#include <string>

#include "squarepeg/geometry.hpp"

namespace squarepeg {

/// Angular interval [phi, psi] of unit directions whose positive ray from a
/// boundary point meets the body; for a polygon this is the tangent cone,
/// computed exactly (width = interior angle at a vertex, pi on an open edge).
struct DirectionArc {
    Point2 base_point;
    double phi = 0.0;
    double psi = 0.0;
    bool samples_consistent = true;  // result of the sampled cross-check
    double width() const { return psi - phi; }
};

DirectionArc direction_arc(const ConvexBody& body, const Point2& x, int angular_resolution = 256);

struct TrivialityVerdict {
    double s = 0.0;
    bool trivial = false;
    std::optional<Square> witness;
    std::string grid;  // resolution metadata; a negative verdict is only as good as this
};

/// True iff sq has side in (0, s], its center in the body, and all four
/// vertices outside the interior.
bool verify_trivial_square(const ConvexBody& body, const Square& sq, double s, double tol = -1.0);

struct TrivialSearchConfig {
    int boundary_samples = 64;
    int interior_grid = 8;
    int rotations = 16;
    int side_steps = 16;  // geometric ladder s, s/2, ..., s/2^(side_steps-1)
};

/// Searches centers x rotations x side lengths for a square witnessing
/// s-triviality. Corner constructions (trivial_square_at at every vertex whose
/// tangent cone is at most a quarter turn wide) are tried first, then the
/// generic grid. First verified witness in scan order wins.
TrivialityVerdict find_trivial_square(const ConvexBody& body, double s,
                                      TrivialSearchConfig cfg = {});

/// The explicit witness at a boundary point whose direction arc spans at most
/// pi/2: the square centered at x with vertices x + (s/sqrt 2) e^{i(phi + k pi/2)}.
/// Valid for every s > 0.
Square trivial_square_at(const ConvexBody& body, const Point2& x, double s);

}  // namespace squarepeg
