#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "squarepeg/geometry.hpp"
#include "squarepeg/shapes.hpp"
#include "test_support.hpp"

using namespace squarepeg;
using namespace squarepeg::testsupport;

namespace {

ConvexBody unit_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("square vertices at rotation zero") {
    const Square sq{{0, 0}, std::numbers::sqrt2, 0.0};
    const auto v = square_vertices(sq);
    const double h = std::numbers::sqrt2 / 2.0;
    CHECK(v[0].x == doctest::Approx(h));
    CHECK(v[0].y == doctest::Approx(h));
    CHECK(v[1].x == doctest::Approx(-h));
    CHECK(v[1].y == doctest::Approx(h));
    CHECK(v[2].x == doctest::Approx(-h));
    CHECK(v[2].y == doctest::Approx(-h));
    CHECK(v[3].x == doctest::Approx(h));
    CHECK(v[3].y == doctest::Approx(-h));
}

TEST_CASE("square vertex properties and round-trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> us(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Square sq{{u(rng), u(rng)}, us(rng), wrap_quarter(u(rng))};
        const auto v = square_vertices(sq);
        for (int k = 0; k < 4; ++k)
            CHECK(dist(v[k], v[(k + 1) % 4]) == doctest::Approx(sq.side).epsilon(1e-12));
        const Point2 mean = (v[0] + v[1] + v[2] + v[3]) / 4.0;
        CHECK(dist(mean, sq.center) < 1e-12 * sq.side);
        CHECK(dot(v[2] - v[0], v[3] - v[1]) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(norm(v[2] - v[0]) == doctest::Approx(sq.side * std::numbers::sqrt2).epsilon(1e-12));

        const Square back = square_from_vertices(v);
        CHECK(dist(back.center, sq.center) < 1e-12 * (1.0 + norm(sq.center)));
        CHECK(back.side == doctest::Approx(sq.side).epsilon(1e-12));
        CHECK(back.rotation == doctest::Approx(sq.rotation).epsilon(1e-9));
    }
}

TEST_CASE("classify_point on the unit square") {
    const ConvexBody body = unit_square();
    CHECK(classify_point(body, {0.5, 0.5}, 1e-9) == PointClass::Interior);
    CHECK(classify_point(body, {0.0, 0.5}, 1e-9) == PointClass::Boundary);
    CHECK(classify_point(body, {2.0, 0.0}, 1e-9) == PointClass::Exterior);
    CHECK(classify_point(body, {0.0, 0.0}, 1e-9) == PointClass::Boundary);
    CHECK(classify_point(body, {1.0 + 1e-12, 0.5}, 1e-9) == PointClass::Boundary);
}

TEST_CASE("convex hull ingestion") {
    // interior and duplicate points are dropped, orientation fixed
    const ConvexBody body = make_polygon({{1, 1}, {0, 0}, {1, 0}, {0.5, 0.5}, {0, 1}, {0, 0}});
    CHECK(body.size() == 4);
    CHECK(body.area() == doctest::Approx(1.0));
    // collinear interior vertices are removed
    const ConvexBody tri = make_polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}});
    CHECK(tri.size() == 3);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {2, 0}}), DegenerateBody);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}}), DegenerateBody);
}

TEST_CASE("diameter") {
    CHECK(unit_square().diameter() == doctest::Approx(std::numbers::sqrt2));
    CHECK(make_regular_ngon(6, 1.0).diameter() == doctest::Approx(2.0));
}

TEST_CASE("sector_contains at a square corner") {
    const ConvexBody body = unit_square();
    CHECK(sector_contains(body, {{0, 0}, {0.3, 0}, kPi / 2.0}));
    CHECK_FALSE(sector_contains(body, {{0, 0}, {0.3, 0}, kPi / 2.0 + 0.1}));
}

TEST_CASE("sector_contains half-disk in a polygonal disk") {
    const ConvexBody body = make_disk(1.0, 256);
    const TruncatedSector sec{{0, 0}, {0.5, 0}, kPi};
    CHECK(sector_contains(body, sec));
    CHECK(sector_contains_sampled(body, sec));
}

TEST_CASE("sector_contains agrees with the dense sampling oracle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> uth(0.1, kPi);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const ConvexBody body = random_convex_polygon(rng, 12);
        const Point2 apex{0.7 * u(rng), 0.7 * u(rng)};
        if (classify_point(body, apex) == PointClass::Exterior) continue;
        const TruncatedSector sec{apex, {0.5 * u(rng), 0.5 * u(rng)}, uth(rng)};
        if (norm(sec.v) < 1e-3) continue;
        const bool exact = sector_contains(body, sec);
        const bool sampled = sector_contains_sampled(body, sec);
        // disagreement is only allowed within boundary tolerance: shrink /
        // grow slightly and require agreement there
        if (exact != sampled) {
            const TruncatedSector shrunk{apex, sec.v * 0.999, sec.theta};
            const TruncatedSector grown{apex, sec.v * 1.001, sec.theta};
            CHECK((sector_contains(body, shrunk) == sector_contains_sampled(body, shrunk) ||
                   sector_contains(body, grown) == sector_contains_sampled(body, grown)));
        } else {
            CHECK(exact == sampled);
        }
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("sector_contains is monotone under shrinking") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> uth(0.1, kPi);
    std::uniform_real_distribution<double> shrink(0.1, 1.0);
    for (int i = 0; i < 500; ++i) {
        const ConvexBody body = random_convex_polygon(rng, 10);
        const Point2 apex{0.5 * u(rng), 0.5 * u(rng)};
        if (classify_point(body, apex) == PointClass::Exterior) continue;
        const TruncatedSector sec{apex, {u(rng), u(rng)}, uth(rng)};
        if (norm(sec.v) < 1e-3) continue;
        if (!sector_contains(body, sec)) continue;
        const TruncatedSector smaller{apex, sec.v * shrink(rng), sec.theta * shrink(rng)};
        CHECK(sector_contains(body, smaller));
    }
}

TEST_CASE("radial_scale on the centered square") {
    const ConvexBody body = make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(radial_scale(body, {1, 0}) == doctest::Approx(1.0));
    const double h = std::numbers::sqrt2 / 2.0;
    CHECK(radial_scale(body, {h, h}) == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("radial_scale on a regular polygon stays between inradius and circumradius") {
    const ConvexBody body = make_regular_ngon(256, 1.0);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    for (int i = 0; i < 100; ++i) {
        const double r = radial_scale(body, dir_of(u(rng)));
        CHECK(r >= std::cos(kPi / 256) - 1e-12);
        CHECK(r <= 1.0 + 1e-12);
    }
}

TEST_CASE("radial_scale homogeneity under body scaling") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> ul(0.2, 5.0);
    for (int i = 0; i < 50; ++i) {
        ConvexBody body = random_convex_polygon(rng, 10);
        body = body.translated(-body.centroid());
        const double lambda = ul(rng);
        const Point2 dir = dir_of(u(rng));
        CHECK(radial_scale(body.scaled(lambda), dir) ==
              doctest::Approx(lambda * radial_scale(body, dir)).epsilon(1e-12));
    }
}

TEST_CASE("radial_scale rejects an exterior origin") {
    const ConvexBody body = make_polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    CHECK_THROWS_AS(radial_scale(body, {1, 0}), OriginNotInterior);
}

TEST_CASE("boundary_points walk the boundary uniformly") {
    const ConvexBody body = unit_square();
    const auto pts = body.boundary_points(8);
    REQUIRE(pts.size() == 8);
    for (const auto& p : pts) CHECK(classify_point(body, p) == PointClass::Boundary);
    CHECK(dist(pts[0], {0, 0}) < 1e-12);
    CHECK(dist(pts[1], {0.5, 0}) < 1e-12);
}

TEST_CASE("ray_interval clips a ray to the body") {
    const ConvexBody body = unit_square();
    const RayInterval iv = ray_interval(body, {-1.0, 0.5}, {1.0, 0.0});
    CHECK(iv.tlo == doctest::Approx(1.0));
    CHECK(iv.thi == doctest::Approx(2.0));
    CHECK(ray_interval(body, {-1.0, 0.5}, {0.0, 1.0}).empty());
}
