#pragma once

#include <optional>
#include <vector>

#include "squarepeg/geometry.hpp"

namespace squarepeg {

/// Witness (v, theta) for a sector of sweep theta = pi/2 + delta contained in
/// the body at `apex`.
struct SectorCertificate {
    Point2 apex;
    Point2 v;
    double theta = 0.0;
    double delta = 0.0;  // margin theta - pi/2
};

struct FDeltaResult {
    double value = 0.0;
    std::optional<SectorCertificate> best;
};

/// Largest radius of a contained sector of sweep pi/2 + delta anchored at x,
/// maximized over orientation: a uniform direction grid of `dir_samples`
/// followed by golden-section refinement around the best grid direction.
/// `seed_orientations` adds extra candidate directions (used at polygon
/// vertices where the feasible orientation window can be narrower than the
/// grid spacing). Returns value 0 with no certificate when no orientation
/// admits a positive radius.
FDeltaResult f_delta(const ConvexBody& body, const Point2& x, double delta, int dir_samples = 64,
                     const std::vector<double>& seed_orientations = {});

struct ObtusenessReport {
    struct PerPoint {
        Point2 point;
        double value = 0.0;
        std::optional<SectorCertificate> certificate;
    };
    bool obtuse = false;           // sampled verdict: every probed f_delta value > 0
    bool angle_criterion = false;  // exact: every interior angle > pi/2 + margin
    bool disagreement = false;
    double delta_used = 0.0;
    double strictness_margin = 0.0;
    double min_interior_angle = 0.0;
    std::vector<PerPoint> per_point;
    Point2 worst_point;  // first minimizer in scan order
    double worst_value = 0.0;
};

/// Evaluates f_delta at every polygon vertex (with cone-aware orientation
/// seeds) plus `boundary_samples` arc-length-uniform boundary points, and
/// cross-checks against the exact interior-angle criterion.
/// strictness_margin < 0 selects margin = delta.
ObtusenessReport is_obtuse(const ConvexBody& body, double delta = 1e-3, int boundary_samples = 64,
                           double strictness_margin = -1.0);

struct SStarConfig {
    int coarse_dir_samples = 32;
    int fine_dir_samples = 64;
    int boundary_samples = 256;
    int refine_rounds = 24;
    int rescored_candidates = 12;
};

/// Grid minimization of f_delta over interior lattice + vertices + boundary
/// samples, with local pattern-search refinement around the minimizer.
/// The result is f_delta evaluated at the best point found, hence an upper
/// bound on min f_delta that tightens as delta -> 0 and grid -> inf.
double s_star(const ConvexBody& body, double delta = 1e-3, int grid = 64, SStarConfig cfg = {});

struct LscProbeResult {
    bool ok = false;
    double radius = 0.0;       // first probe radius (descending scan) that worked
    double f_at_x = 0.0;
    double min_nearby = 0.0;   // min sampled f_delta within the returned radius
};

/// Samples f_delta on circles around x (intersected with the body) at each
/// listed radius, largest first, and reports the first radius at which every
/// sample stays above f_delta(x) - epsilon. ok = false flags a numerical
/// counterexample candidate.
LscProbeResult lsc_probe(const ConvexBody& body, const Point2& x, double epsilon, double delta,
                         const std::vector<double>& radii, int circle_samples = 48,
                         int dir_samples = 48);

}  // namespace squarepeg
