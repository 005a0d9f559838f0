#include "squarepeg/obtuseness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace squarepeg {

namespace {

struct DirectionalBest {
    double radius = 0.0;
    double phi = 0.0;
};

// Max contained-sector radius over a set of orientations, optionally refined
// by golden-section search around the best candidate.
DirectionalBest best_radius(const ConvexBody& body, const Point2& x, double theta, int dir_samples,
                            const std::vector<double>& seeds, bool refine) {
    DirectionalBest best;
    const double step = 2.0 * kPi / dir_samples;
    for (int k = 0; k < dir_samples; ++k) {
        const double phi = k * step;
        const double r = max_sector_radius(body, x, phi, theta);
        if (r > best.radius) best = {r, phi};
    }
    for (double phi : seeds) {
        const double r = max_sector_radius(body, x, phi, theta);
        if (r > best.radius) best = {r, phi};
    }
    if (!refine || best.radius <= 0.0) return best;

    // golden-section maximization of r(phi) on a bracket around the winner
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best.phi - step, hi = best.phi + step;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = max_sector_radius(body, x, c, theta);
    double fd = max_sector_radius(body, x, d, theta);
    for (int it = 0; it < 60; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = max_sector_radius(body, x, c, theta);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = max_sector_radius(body, x, d, theta);
        }
        const double f = std::max(fc, fd);
        if (f > best.radius) best = {f, fc > fd ? c : d};
    }
    return best;
}

std::vector<double> vertex_orientation_seeds(const ConvexBody& body, std::size_t i, double theta) {
    const std::size_t n = body.size();
    const Point2& v = body.vertices()[i];
    const double alpha = body.interior_angle(i);
    const double window = alpha - theta;
    if (window < 0.0) return {};
    const double phi_lo = angle_of(body.vertices()[(i + 1) % n] - v);
    return {phi_lo, phi_lo + window / 2.0, phi_lo + window};
}

// Boundary samples that land on a vertex must not be probed without the
// vertex's cone seeds: the feasible orientation window there can be narrower
// than any uniform grid, and a seedless probe reads a spurious zero.
bool coincides_with_vertex(const ConvexBody& body, const Point2& p) {
    const double tol = 1e3 * body.default_tol();
    for (const Point2& v : body.vertices())
        if (dist(v, p) <= tol) return true;
    return false;
}

}  // namespace

FDeltaResult f_delta(const ConvexBody& body, const Point2& x, double delta, int dir_samples,
                     const std::vector<double>& seed_orientations) {
    if (classify_point(body, x) == PointClass::Exterior)
        throw PointOutsideBody("f_delta: point lies outside the body");
    const double theta = kPi / 2.0 + delta;
    const DirectionalBest best =
        best_radius(body, x, theta, std::max(dir_samples, 8), seed_orientations, true);
    if (best.radius <= 1e-12 * body.diameter()) return {0.0, std::nullopt};

    SectorCertificate cert;
    cert.apex = x;
    cert.theta = theta;
    cert.delta = delta;
    double r = best.radius;
    cert.v = dir_of(best.phi) * r;
    // the closed form and the containment predicate share their tolerance,
    // but guard against a borderline ulp anyway
    for (int shrink = 0; shrink < 4 && !sector_contains(body, {x, cert.v, theta}); ++shrink) {
        r *= 1.0 - 1e-12;
        cert.v = dir_of(best.phi) * r;
    }
    return {best.radius, cert};
}

ObtusenessReport is_obtuse(const ConvexBody& body, double delta, int boundary_samples,
                           double strictness_margin) {
    ObtusenessReport rep;
    rep.delta_used = delta;
    rep.strictness_margin = strictness_margin < 0.0 ? delta : strictness_margin;
    const double theta = kPi / 2.0 + delta;
    const double pos_tol = 1e-12 * body.diameter();
    boundary_samples = std::max<int>(boundary_samples, static_cast<int>(body.size()));

    std::vector<std::pair<Point2, std::vector<double>>> probes;
    for (std::size_t i = 0; i < body.size(); ++i)
        probes.emplace_back(body.vertices()[i], vertex_orientation_seeds(body, i, theta));
    for (const Point2& p : body.boundary_points(boundary_samples))
        if (!coincides_with_vertex(body, p)) probes.emplace_back(p, std::vector<double>{});

    rep.obtuse = true;
    rep.worst_value = std::numeric_limits<double>::infinity();
    for (const auto& [p, seeds] : probes) {
        FDeltaResult r = f_delta(body, p, delta, 64, seeds);
        if (r.value <= pos_tol) rep.obtuse = false;
        if (r.value < rep.worst_value) {
            rep.worst_value = r.value;
            rep.worst_point = p;
        }
        rep.per_point.push_back({p, r.value, r.best});
    }

    rep.min_interior_angle = body.min_interior_angle();
    rep.angle_criterion = rep.min_interior_angle > kPi / 2.0 + rep.strictness_margin;
    rep.disagreement = rep.obtuse != rep.angle_criterion;
    return rep;
}

double s_star(const ConvexBody& body, double delta, int grid, SStarConfig cfg) {
    grid = std::max(grid, 8);
    const double theta = kPi / 2.0 + delta;

    struct Candidate {
        Point2 p;
        double coarse;
    };
    std::vector<Candidate> cands;

    double best_value = std::numeric_limits<double>::infinity();
    Point2 best_point;

    // vertices: scored exactly (cone-aware seeds + refinement) right away,
    // since the minimum of a non-obtuse polygon sits there
    for (std::size_t i = 0; i < body.size(); ++i) {
        const auto seeds = vertex_orientation_seeds(body, i, theta);
        const double v =
            best_radius(body, body.vertices()[i], theta, cfg.fine_dir_samples, seeds, true).radius;
        if (v < best_value) {
            best_value = v;
            best_point = body.vertices()[i];
        }
    }

    for (const Point2& p : body.boundary_points(cfg.boundary_samples))
        if (!coincides_with_vertex(body, p))
            cands.push_back({p, best_radius(body, p, theta, cfg.coarse_dir_samples, {}, false).radius});

    const BoundingBox bb = body.bbox();
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const Point2 p{bb.xmin + (i + 0.5) * (bb.xmax - bb.xmin) / grid,
                           bb.ymin + (j + 0.5) * (bb.ymax - bb.ymin) / grid};
            if (classify_point(body, p) != PointClass::Interior) continue;
            cands.push_back({p, best_radius(body, p, theta, cfg.coarse_dir_samples, {}, false).radius});
        }
    }

    // the coarse scores underestimate f_delta, so rescore the lowest few
    // candidates at full resolution before comparing
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.coarse < b.coarse; });
    const std::size_t rescore = std::min<std::size_t>(cands.size(), cfg.rescored_candidates);
    for (std::size_t k = 0; k < rescore; ++k) {
        const double v = best_radius(body, cands[k].p, theta, cfg.fine_dir_samples, {}, true).radius;
        if (v < best_value) {
            best_value = v;
            best_point = cands[k].p;
        }
    }

    // local pattern search around the incumbent
    double h = std::max(bb.xmax - bb.xmin, bb.ymax - bb.ymin) / grid;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        bool moved = false;
        for (int di = -1; di <= 1; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) continue;
                const Point2 p = best_point + Point2{di * h, dj * h};
                if (classify_point(body, p) == PointClass::Exterior) continue;
                if (coincides_with_vertex(body, p)) continue;
                const double v = best_radius(body, p, theta, cfg.fine_dir_samples, {}, true).radius;
                if (v < best_value) {
                    best_value = v;
                    best_point = p;
                    moved = true;
                }
            }
        }
        if (!moved) h *= 0.5;
    }
    return std::max(best_value, 0.0);
}

LscProbeResult lsc_probe(const ConvexBody& body, const Point2& x, double epsilon, double delta,
                         const std::vector<double>& radii, int circle_samples, int dir_samples) {
    if (classify_point(body, x) == PointClass::Exterior)
        throw PointOutsideBody("lsc_probe: point lies outside the body");
    const double theta = kPi / 2.0 + delta;

    LscProbeResult res;
    res.f_at_x = best_radius(body, x, theta, dir_samples, {}, true).radius;

    for (double r : radii) {
        double min_nearby = std::numeric_limits<double>::infinity();
        for (int j = 0; j < circle_samples; ++j) {
            const Point2 y = x + dir_of(2.0 * kPi * j / circle_samples) * r;
            if (classify_point(body, y) == PointClass::Exterior) continue;
            min_nearby =
                std::min(min_nearby, best_radius(body, y, theta, dir_samples, {}, true).radius);
        }
        if (min_nearby > res.f_at_x - epsilon) {
            res.ok = true;
            res.radius = r;
            res.min_nearby = min_nearby;
            return res;
        }
        res.min_nearby = min_nearby;
    }
    return res;
}

}  // namespace squarepeg
