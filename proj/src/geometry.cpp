#include "squarepeg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace squarepeg {

std::array<Point2, 4> square_vertices(const Square& sq) {
    std::array<Point2, 4> out;
    const double d = sq.side / std::numbers::sqrt2;
    for (int k = 0; k < 4; ++k) {
        const double a = sq.rotation + kPi / 4.0 + k * kPi / 2.0;
        out[k] = sq.center + dir_of(a) * d;
    }
    return out;
}

Square square_from_vertices(const std::array<Point2, 4>& v) {
    Point2 c = (v[0] + v[1] + v[2] + v[3]) / 4.0;
    double side = 0.0;
    for (int k = 0; k < 4; ++k) side += dist(v[k], v[(k + 1) % 4]);
    side /= 4.0;
    const double rot = wrap_quarter(angle_of(v[0] - c) - kPi / 4.0);
    return Square{c, side, rot};
}

namespace {

// Monotone chain; strict turns only, so collinear points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * scale * scale;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

}  // namespace

ConvexBody ConvexBody::from_points(std::vector<Point2> pts, std::string provenance) {
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateBody("non-finite input coordinate");
    }
    ConvexBody body;
    body.vertices_ = convex_hull(std::move(pts));
    if (body.vertices_.size() < 3)
        throw DegenerateBody("convex hull has fewer than 3 vertices");
    body.provenance_ = std::move(provenance);
    body.finalize();
    return body;
}

void ConvexBody::finalize() {
    const std::size_t n = vertices_.size();
    edges_.clear();
    edges_.reserve(n);
    area_ = 0.0;
    perimeter_ = 0.0;
    bbox_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
    Point2 csum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const double cr = cross(a, b);
        area_ += cr;
        csum = csum + (a + b) * cr;
        Edge e;
        e.a = a;
        e.b = b;
        const Point2 d = b - a;
        e.len = norm(d);
        e.n = Point2{d.y, -d.x} / e.len;  // outward for CCW
        e.c = dot(e.n, a);
        edges_.push_back(e);
        perimeter_ += e.len;
        bbox_.xmin = std::min(bbox_.xmin, a.x);
        bbox_.xmax = std::max(bbox_.xmax, a.x);
        bbox_.ymin = std::min(bbox_.ymin, a.y);
        bbox_.ymax = std::max(bbox_.ymax, a.y);
    }
    area_ *= 0.5;
    if (area_ <= 0.0) throw DegenerateBody("polygon is not counterclockwise / has no area");
    centroid_ = csum / (6.0 * area_);
    diameter_ = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            diameter_ = std::max(diameter_, dist(vertices_[i], vertices_[j]));
}

double ConvexBody::interior_angle(std::size_t i) const {
    const std::size_t n = vertices_.size();
    const Point2& v = vertices_[i];
    const Point2 u1 = unit(vertices_[(i + 1) % n] - v);
    const Point2 u2 = unit(vertices_[(i + n - 1) % n] - v);
    return std::acos(std::clamp(dot(u1, u2), -1.0, 1.0));
}

double ConvexBody::min_interior_angle() const {
    double m = kPi;
    for (std::size_t i = 0; i < vertices_.size(); ++i) m = std::min(m, interior_angle(i));
    return m;
}

std::vector<Point2> ConvexBody::boundary_points(int k) const {
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(std::max(k, 0)));
    if (k <= 0) return out;
    const double step = perimeter_ / k;
    double want = 0.0;
    double walked = 0.0;
    std::size_t produced = 0;
    for (const auto& e : edges_) {
        while (produced < static_cast<std::size_t>(k) && want < walked + e.len) {
            const double t = (want - walked) / e.len;
            out.push_back(e.a + (e.b - e.a) * t);
            ++produced;
            want += step;
        }
        walked += e.len;
    }
    while (produced < static_cast<std::size_t>(k)) {
        out.push_back(vertices_[0]);
        ++produced;
    }
    return out;
}

ConvexBody ConvexBody::translated(const Point2& t) const {
    std::vector<Point2> pts = vertices_;
    for (auto& p : pts) p = p + t;
    return from_points(std::move(pts), provenance_);
}

ConvexBody ConvexBody::scaled(double lambda) const {
    if (lambda <= 0.0) throw DegenerateBody("scale factor must be positive");
    std::vector<Point2> pts = vertices_;
    for (auto& p : pts) p = p * lambda;
    return from_points(std::move(pts), provenance_);
}

PointClass classify_point(const ConvexBody& body, const Point2& p, double tol) {
    if (tol < 0.0) tol = body.default_tol();
    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& e : body.edges()) min_slack = std::min(min_slack, e.c - dot(e.n, p));
    if (min_slack > tol) return PointClass::Interior;
    if (distance_to_boundary(body, p) <= tol) return PointClass::Boundary;
    return min_slack >= 0.0 ? PointClass::Interior : PointClass::Exterior;
}

double distance_to_boundary(const ConvexBody& body, const Point2& p) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& e : body.edges()) d = std::min(d, point_segment_distance(p, e.a, e.b));
    return d;
}

bool sector_contains(const ConvexBody& body, const TruncatedSector& sec, double tol) {
    if (tol < 0.0) tol = body.default_tol();
    const double r = norm(sec.v);
    const double phi0 = angle_of(sec.v);
    const Point2 p1 = sec.apex + sec.v;
    const Point2 p2 = sec.apex + rotated(sec.v, sec.theta);
    for (const auto& e : body.edges()) {
        if (dot(e.n, sec.apex) > e.c + tol) return false;
        if (dot(e.n, p1) > e.c + tol) return false;
        if (dot(e.n, p2) > e.c + tol) return false;
        const double dphi = wrap_two_pi(angle_of(e.n) - phi0);
        if (dphi <= sec.theta) {
            // arc extremal point in the normal direction
            if (dot(e.n, sec.apex) + r > e.c + tol) return false;
        }
    }
    return true;
}

double max_sector_radius(const ConvexBody& body, const Point2& apex, double phi, double theta,
                         double tol) {
    if (tol < 0.0) tol = body.default_tol();
    const Point2 u1 = dir_of(phi);
    const Point2 u2 = dir_of(phi + theta);
    double r = 2.0 * body.diameter();
    for (const auto& e : body.edges()) {
        double slack = e.c - dot(e.n, apex);
        if (slack < -tol) return 0.0;
        if (slack < 0.0) slack = 0.0;
        const double d1 = dot(e.n, u1);
        if (d1 > 0.0) r = std::min(r, slack / d1);
        const double d2 = dot(e.n, u2);
        if (d2 > 0.0) r = std::min(r, slack / d2);
        const double dphi = wrap_two_pi(angle_of(e.n) - phi);
        if (dphi <= theta) r = std::min(r, slack);
        if (r <= 0.0) return 0.0;
    }
    return std::max(r, 0.0);
}

double radial_scale(const ConvexBody& body, const Point2& u) {
    if (classify_point(body, Point2{0.0, 0.0}) != PointClass::Interior)
        throw OriginNotInterior("radial_scale requires the origin strictly inside the body");
    double t = std::numeric_limits<double>::infinity();
    for (const auto& e : body.edges()) {
        const double d = dot(e.n, u);
        if (d > 0.0) t = std::min(t, e.c / d);
    }
    return t;
}

RayInterval ray_interval(const ConvexBody& body, const Point2& origin, const Point2& u) {
    RayInterval iv;
    iv.tlo = 0.0;
    iv.thi = std::numeric_limits<double>::infinity();
    const double tol = body.default_tol();
    for (const auto& e : body.edges()) {
        const double d = dot(e.n, u);
        const double slack = e.c - dot(e.n, origin);
        if (std::abs(d) <= 1e-15) {
            if (slack < -tol) {
                iv.thi = -1.0;
                iv.tlo = 0.0;
                return iv;
            }
            continue;
        }
        const double t = slack / d;
        if (d > 0.0)
            iv.thi = std::min(iv.thi, t);
        else
            iv.tlo = std::max(iv.tlo, t);
    }
    return iv;
}

}  // namespace squarepeg
