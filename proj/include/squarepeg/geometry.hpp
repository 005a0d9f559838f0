#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "squarepeg/errors.hpp"

namespace squarepeg {

inline constexpr double kPi = std::numbers::pi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2 operator/(double s) const { return {x / s, y / s}; }
    Point2 operator-() const { return {-x, -y}; }
};

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point2& a, const Point2& b) { return norm(a - b); }
inline Point2 unit(const Point2& a) { return a / norm(a); }
inline Point2 rot90(const Point2& a) { return {-a.y, a.x}; }
inline double angle_of(const Point2& a) { return std::atan2(a.y, a.x); }

/// Counterclockwise rotation by `phi`, i.e. multiplication by e^{i phi}.
inline Point2 rotated(const Point2& a, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline Point2 dir_of(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// Wrap into [0, 2*pi).
inline double wrap_two_pi(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

/// Wrap into [0, pi/2) -- the rotation range of a square.
inline double wrap_quarter(double a) {
    a = std::fmod(a, kPi / 2.0);
    if (a < 0.0) a += kPi / 2.0;
    return a;
}

enum class PointClass { Interior, Boundary, Exterior };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Interior: return "interior";
        case PointClass::Boundary: return "boundary";
        default: return "exterior";
    }
}

/// Square given by center, side length and rotation in [0, pi/2).
/// Vertex k sits at center + (side/sqrt(2)) * e^{i(rotation + pi/4 + k*pi/2)}.
struct Square {
    Point2 center;
    double side = 0.0;
    double rotation = 0.0;
};

std::array<Point2, 4> square_vertices(const Square& sq);

/// Reconstructs a Square from four vertices (in any rotational order starting
/// from a consistent corner listing, counterclockwise).
Square square_from_vertices(const std::array<Point2, 4>& v);

/// The set {apex + r * e^{i phi} * v : phi in [0, theta], r in [0, 1]}.
/// Convex for theta <= pi (hull of the apex and the circular arc).
struct TruncatedSector {
    Point2 apex;
    Point2 v;
    double theta = 0.0;
};

struct BoundingBox {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
};

/// Compact convex region stored as a strictly convex counterclockwise polygon.
/// Construction takes an arbitrary point list, hulls it and drops collinear
/// vertices; fewer than 3 hull vertices is rejected.
class ConvexBody {
  public:
    static ConvexBody from_points(std::vector<Point2> pts, std::string provenance = "polygon");

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const std::string& provenance() const { return provenance_; }

    double area() const { return area_; }
    double diameter() const { return diameter_; }
    double perimeter() const { return perimeter_; }
    Point2 centroid() const { return centroid_; }
    BoundingBox bbox() const { return bbox_; }

    /// Scale-free default boundary tolerance, 1e-9 * diameter.
    double default_tol() const { return 1e-9 * diameter_; }

    struct Edge {
        Point2 a, b;
        Point2 n;  // unit outward normal
        double c;  // offset: the edge line is {p : dot(n,p) = c}, inside is <= c
        double len;
    };
    const std::vector<Edge>& edges() const { return edges_; }

    /// Interior angle at vertex i, in (0, pi).
    double interior_angle(std::size_t i) const;
    double min_interior_angle() const;

    /// k arc-length-uniform boundary points starting at vertex 0.
    std::vector<Point2> boundary_points(int k) const;

    ConvexBody translated(const Point2& t) const;
    /// Scaled about the origin.
    ConvexBody scaled(double lambda) const;

  private:
    ConvexBody() = default;
    void finalize();

    std::vector<Point2> vertices_;
    std::vector<Edge> edges_;
    std::string provenance_;
    double area_ = 0.0;
    double diameter_ = 0.0;
    double perimeter_ = 0.0;
    Point2 centroid_;
    BoundingBox bbox_;
};

/// Classifies p against the body. Interior iff strictly inside every edge
/// half-plane by more than tol; Boundary iff within tol of the boundary;
/// Exterior otherwise. tol < 0 selects body.default_tol().
PointClass classify_point(const ConvexBody& body, const Point2& p, double tol = -1.0);

/// Distance from p to the boundary polyline.
double distance_to_boundary(const ConvexBody& body, const Point2& p);

/// Exact containment test for a truncated sector (theta <= pi) in the body:
/// per edge half-plane, checks the apex, both arc endpoints, and the arc's
/// extremal point whenever the edge normal direction falls in the sweep span.
bool sector_contains(const ConvexBody& body, const TruncatedSector& sec, double tol = -1.0);

/// Largest r such that the sector of sweep `theta` anchored at `apex` with
/// radius vector r * e^{i phi} is contained in the body. Closed form: the
/// minimum over the per-edge half-plane constraints. Returns 0 when no
/// positive radius fits.
double max_sector_radius(const ConvexBody& body, const Point2& apex, double phi, double theta,
                         double tol = -1.0);

/// Distance from the origin to the boundary along unit direction u (the
/// radial/gauge function). Requires the origin strictly interior.
double radial_scale(const ConvexBody& body, const Point2& u);

/// Parameter interval [tlo, thi] of {origin + t*u : t >= 0} clipped to the
/// body; empty (tlo > thi) when the ray misses.
struct RayInterval {
    double tlo = 0.0;
    double thi = -1.0;
    bool empty() const { return thi < tlo; }
};
RayInterval ray_interval(const ConvexBody& body, const Point2& origin, const Point2& u);

}  // namespace squarepeg
