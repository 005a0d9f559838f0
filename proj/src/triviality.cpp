#include "squarepeg/triviality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace squarepeg {

namespace {

bool ray_hits_body(const ConvexBody& body, const Point2& origin, const Point2& u) {
    const RayInterval iv = ray_interval(body, origin, u);
    return !iv.empty() && iv.thi > body.default_tol();
}

}  // namespace

DirectionArc direction_arc(const ConvexBody& body, const Point2& x, int angular_resolution) {
    const double tol = body.default_tol();
    if (classify_point(body, x) != PointClass::Boundary)
        throw NotBoundaryPoint("direction_arc: point is not on the boundary");

    DirectionArc arc;
    arc.base_point = x;

    const auto& verts = body.vertices();
    const std::size_t n = verts.size();
    std::size_t vi = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(verts[i], x) <= tol) {
            vi = i;
            break;
        }
    }
    if (vi < n) {
        const double alpha = body.interior_angle(vi);
        arc.phi = angle_of(verts[(vi + 1) % n] - verts[vi]);
        arc.psi = arc.phi + alpha;
    } else {
        // edge-interior point: the arc is the closed inward half circle
        std::size_t ei = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < body.edges().size(); ++i) {
            const auto& e = body.edges()[i];
            const double d = std::abs(dot(e.n, x) - e.c);
            if (d < best) {
                best = d;
                ei = i;
            }
        }
        const auto& e = body.edges()[ei];
        arc.phi = angle_of(e.b - e.a);
        arc.psi = arc.phi + kPi;
    }

    // sampled cross-check: inside the open arc the ray must meet the body,
    // clearly outside it must not
    const double margin = 2.0 * kPi / angular_resolution;
    for (int k = 0; k < angular_resolution; ++k) {
        const double t = 2.0 * kPi * k / angular_resolution;
        const double rel = wrap_two_pi(t - arc.phi);
        const bool hits = ray_hits_body(body, x, dir_of(t));
        if (rel > margin && rel < arc.width() - margin && !hits) arc.samples_consistent = false;
        if (rel > arc.width() + margin && rel < 2.0 * kPi - margin && hits)
            arc.samples_consistent = false;
    }
    return arc;
}

bool verify_trivial_square(const ConvexBody& body, const Square& sq, double s, double tol) {
    if (tol < 0.0) tol = body.default_tol();
    if (!(sq.side > 0.0) || sq.side > s + tol) return false;
    if (classify_point(body, sq.center, tol) == PointClass::Exterior) return false;
    for (const Point2& v : square_vertices(sq))
        if (classify_point(body, v, tol) == PointClass::Interior) return false;
    return true;
}

Square trivial_square_at(const ConvexBody& body, const Point2& x, double s) {
    if (!(s > 0.0)) throw InvalidSide("trivial_square_at: side must be > 0");
    const DirectionArc arc = direction_arc(body, x);
    if (arc.width() > kPi / 2.0 + 1e-9)
        throw ArcTooWide("trivial_square_at: direction arc wider than pi/2");
    return Square{x, s, wrap_quarter(arc.phi - kPi / 4.0)};
}

TrivialityVerdict find_trivial_square(const ConvexBody& body, double s, TrivialSearchConfig cfg) {
    if (!(s > 0.0)) throw InvalidSide("find_trivial_square: side must be > 0");

    TrivialityVerdict verdict;
    verdict.s = s;
    {
        std::ostringstream g;
        g << "boundary_samples=" << cfg.boundary_samples << " interior_grid=" << cfg.interior_grid
          << " rotations=" << cfg.rotations << " side_steps=" << cfg.side_steps;
        verdict.grid = g.str();
    }

    std::vector<double> sides;
    sides.reserve(cfg.side_steps);
    for (int j = 0; j < cfg.side_steps; ++j) sides.push_back(s * std::pow(2.0, -j));

    // corner construction first: it succeeds at every side length when the
    // tangent cone is narrow enough
    for (const Point2& v : body.vertices()) {
        const DirectionArc arc = direction_arc(body, v, 64);
        if (arc.width() > kPi / 2.0 + 1e-9) continue;
        for (double t : sides) {
            const Square sq{v, t, wrap_quarter(arc.phi - kPi / 4.0)};
            if (verify_trivial_square(body, sq, s)) {
                verdict.trivial = true;
                verdict.witness = sq;
                return verdict;
            }
        }
    }

    std::vector<Point2> centers = body.vertices();
    for (const Point2& p : body.boundary_points(cfg.boundary_samples)) centers.push_back(p);
    // near-boundary offsets, nudged inward
    const Point2 c0 = body.centroid();
    for (const Point2& p : body.boundary_points(cfg.boundary_samples))
        centers.push_back(p + (c0 - p) * 0.02);
    const BoundingBox bb = body.bbox();
    for (int i = 0; i < cfg.interior_grid; ++i)
        for (int j = 0; j < cfg.interior_grid; ++j) {
            const Point2 p{bb.xmin + (i + 0.5) * (bb.xmax - bb.xmin) / cfg.interior_grid,
                           bb.ymin + (j + 0.5) * (bb.ymax - bb.ymin) / cfg.interior_grid};
            if (classify_point(body, p) != PointClass::Exterior) centers.push_back(p);
        }

    for (const Point2& c : centers) {
        for (int k = 0; k < cfg.rotations; ++k) {
            const double rot = (kPi / 2.0) * k / cfg.rotations;
            for (double t : sides) {
                const Square sq{c, t, rot};
                if (verify_trivial_square(body, sq, s)) {
                    verdict.trivial = true;
                    verdict.witness = sq;
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

}  // namespace squarepeg
