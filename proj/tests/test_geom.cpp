#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharygin/error.hpp"
#include "sharygin/geom.hpp"
#include "sharygin/rng.hpp"

using namespace sharygin;

namespace {
const Circle kUnit{{0.0, 0.0}, 1.0};

Point on_circle_at(const Circle& c, double ang) {
    return c.center + Point{std::cos(ang), std::sin(ang)} * c.radius;
}
} // namespace

TEST_CASE("power of a point") {
    CHECK(power_of_point({3, 0}, kUnit) == doctest::Approx(8.0));
    CHECK(power_of_point(on_circle_at(kUnit, 0.7), kUnit) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(power_of_point({0, 0}, Circle{{3, 0}, 1}) == doctest::Approx(8.0));

    Rng rng(7);
    Tol tol;
    for (int i = 0; i < 200; ++i) {
        Circle c{{rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.uniform(0.2, 4.0)};
        Point p = on_circle_at(c, rng.uniform(0, 6.28));
        CHECK(tol.zero(power_of_point(p, c), c.radius * c.radius));
    }
}

TEST_CASE("radical axis") {
    Line l = radical_axis(kUnit, Circle{{3, 0}, 1});
    CHECK(line_residual(l, Line::make(1, 0, -1.5)) < 1e-12);

    Line l2 = radical_axis(kUnit, Circle{{0, 3}, 1});
    CHECK(line_residual(l2, Line::make(0, 1, -1.5)) < 1e-12);

    CHECK_THROWS_AS(radical_axis(kUnit, Circle{{0, 0}, 2}), Error);

    // Equal powers along the axis.
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Circle c1{{rng.uniform(-3, 3), rng.uniform(-3, 3)}, rng.uniform(0.3, 2.0)};
        Circle c2{{rng.uniform(-3, 3), rng.uniform(-3, 3)}, rng.uniform(0.3, 2.0)};
        if (dist(c1.center, c2.center) < 0.1) continue;
        Line ax = radical_axis(c1, c2);
        for (int k = 0; k < 10; ++k) {
            Point p = ax.point() + ax.direction() * rng.uniform(-4, 4);
            double p1 = power_of_point(p, c1), p2 = power_of_point(p, c2);
            CHECK(std::abs(p1 - p2) <= 1e-9 * std::max(std::abs(p1), 1.0));
        }
    }
}

TEST_CASE("inversion of the basic objects") {
    // Circle away from the center.
    GObject img = invert({0, 0}, 1.0, GObject{Circle{{3, 0}, 1}});
    const Circle& c = std::get<Circle>(img);
    CHECK(c.center.x == doctest::Approx(3.0 / 8.0));
    CHECK(c.center.y == doctest::Approx(0.0));
    CHECK(c.radius == doctest::Approx(1.0 / 8.0));

    // Unit circle about its own center is fixed.
    const Circle fixed = std::get<Circle>(invert({0, 0}, 1.0, GObject{kUnit}));
    CHECK(fixed.center.x == doctest::Approx(0.0));
    CHECK(fixed.radius == doctest::Approx(1.0));

    // Line x = 1 maps to the circle with diameter from the origin to (1, 0).
    const Circle lc = std::get<Circle>(invert({0, 0}, 1.0, GObject{Line::make(1, 0, -1)}));
    CHECK(lc.center.x == doctest::Approx(0.5));
    CHECK(lc.radius == doctest::Approx(0.5));

    // Circle through the center maps to a line (antipode of the center at (2,0) -> (1/2,0)).
    const Line ln = std::get<Line>(invert({0, 0}, 1.0, GObject{Circle{{1, 0}, 1}}));
    CHECK(line_residual(ln, Line::make(1, 0, -0.5)) < 1e-12);

    CHECK_THROWS_AS(invert({0, 0}, 1.0, GObject{Point{0, 0}}), Error);
}

TEST_CASE("inversion is an involution") {
    Rng rng(13);
    Tol tol;
    for (int i = 0; i < 300; ++i) {
        Point z{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        double k2 = rng.uniform(0.3, 3.0);
        Circle c{{rng.uniform(-4, 4), rng.uniform(-4, 4)}, rng.uniform(0.2, 1.5)};
        if (std::abs(power_of_point(z, c)) < 0.05) continue;
        GObject round = invert(z, k2, invert(z, k2, GObject{c}));
        const Circle& rc = std::get<Circle>(round);
        CHECK(tol.near(rc.center.x, c.center.x, c.radius));
        CHECK(tol.near(rc.center.y, c.center.y, c.radius));
        CHECK(tol.near(rc.radius, c.radius, c.radius));
    }
}

TEST_CASE("polar lines") {
    CHECK(line_residual(polar({2, 0}, kUnit), Line::make(1, 0, -0.5)) < 1e-12);

    // Point on the circle: the polar is the tangent there.
    Point p = on_circle_at(kUnit, 0.3);
    Line t = polar(p, kUnit);
    CHECK(std::abs(t.signed_dist(p)) < 1e-12);
    CHECK(tangency(GObject{kUnit}, GObject{t}) == Tangency::LineTangent);

    CHECK_THROWS_AS(polar({0, 0}, kUnit), Error);
}

TEST_CASE("polar duality") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Circle c{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.4, 2.0)};
        Point p = c.center + Point{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        Point q = c.center + Point{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        if (dist(p, c.center) < 0.05 || dist(q, c.center) < 0.05) continue;
        // Q on polar(P) iff P on polar(Q): both incidence residuals equal
        // |(Q-O).(P-O) - r^2| after scaling by the pole distance.
        double a = std::abs(polar(p, c).signed_dist(q)) * dist(p, c.center);
        double b = std::abs(polar(q, c).signed_dist(p)) * dist(q, c.center);
        CHECK(std::abs(a - b) < 1e-9 * std::max({a, b, 1.0}));
    }
}

TEST_CASE("circumcircle") {
    Circle c1 = circumcircle({1, 0}, {0, 1}, {-1, 0});
    CHECK(c1.center.x == doctest::Approx(0.0));
    CHECK(c1.radius == doctest::Approx(1.0));

    Circle c2 = circumcircle({0, 0}, {2, 0}, {0, 2});
    CHECK(c2.center.x == doctest::Approx(1.0));
    CHECK(c2.center.y == doctest::Approx(1.0));
    CHECK(c2.radius == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(circumcircle({0, 0}, {1, 1}, {2, 2}), Error);

    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        Point a{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        Point b{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        Point c{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        if (std::abs(cross(b - a, c - a)) < 0.1) continue;
        Circle cc = circumcircle(a, b, c);
        for (const Point& p : {a, b, c})
            CHECK(std::abs(power_of_point(p, cc)) < 1e-9 * cc.radius * cc.radius);
    }
}

TEST_CASE("intersections") {
    auto pts = intersect(GObject{kUnit}, GObject{Line::make(0, 1, 0)});
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == doctest::Approx(-1.0));
    CHECK(pts[1].x == doctest::Approx(1.0));

    auto tangent_pt = intersect(GObject{kUnit}, GObject{Circle{{2, 0}, 1}});
    REQUIRE(tangent_pt.size() == 1);
    CHECK(tangent_pt[0].x == doctest::Approx(1.0));

    CHECK(intersect(GObject{kUnit}, GObject{Circle{{5, 0}, 1}}).empty());
    CHECK_THROWS_AS(intersect(GObject{kUnit}, GObject{kUnit}), Error);
}

TEST_CASE("tangency classification") {
    CHECK(tangency(GObject{kUnit}, GObject{Circle{{2, 0}, 1}}) == Tangency::External);
    CHECK(tangency(GObject{kUnit}, GObject{Circle{{1, 0}, 2}}) == Tangency::Internal);
    CHECK(tangency(GObject{kUnit}, GObject{Line::make(0, 1, -1)}) == Tangency::LineTangent);
    CHECK(tangency(GObject{kUnit}, GObject{Circle{{5, 0}, 1}}) == Tangency::None);

    // External tangency pairs constructed by design meet in exactly one point.
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Circle a{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.3, 1.5)};
        double r2 = rng.uniform(0.3, 1.5);
        double ang = rng.uniform(0, 6.28);
        Circle b{a.center + Point{std::cos(ang), std::sin(ang)} * (a.radius + r2), r2};
        CHECK(tangency(GObject{a}, GObject{b}) == Tangency::External);
        CHECK(intersect(GObject{a}, GObject{b}).size() == 1);
    }
}

TEST_CASE("angle bisector foot") {
    Point t = angle_bisector_foot({0, 2}, {-1, 0}, {1, 0});
    CHECK(t.x == doctest::Approx(0.0));
    CHECK(t.y == doctest::Approx(0.0));

    // SA = 2 SB puts the foot at the 2:1 division point from A.
    Point s{0, 0}, a{-2, 3}, b{1, 1.5};
    double da = dist(s, a), db = dist(s, b);
    Point foot = angle_bisector_foot(s, a, b);
    CHECK(dist(a, foot) / dist(foot, b) == doctest::Approx(da / db));

    // The foot really bisects the angle.
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        Point ss{rng.uniform(-3, 3), rng.uniform(1, 4)};
        Point aa{rng.uniform(-4, -0.5), 0.0}, bb{rng.uniform(0.5, 4), 0.0};
        Point tt = angle_bisector_foot(ss, aa, bb);
        Point u = normalized(aa - ss), v = normalized(bb - ss), w = normalized(tt - ss);
        CHECK(std::abs(dot(u, w) - dot(v, w)) < 1e-9);
    }

    CHECK_THROWS_AS(angle_bisector_foot({0, 0}, {-1, 0}, {1, 0}), Error);
}

TEST_CASE("arc midpoint") {
    double h = std::sqrt(0.5);
    Point m = arc_midpoint(kUnit, {1, 0}, {0, 1}, {-1, 0});
    CHECK(m.x == doctest::Approx(h));
    CHECK(m.y == doctest::Approx(h));

    Point m2 = arc_midpoint(kUnit, {1, 0}, {0, 1}, {std::cos(0.8), std::sin(0.8)});
    CHECK(m2.x == doctest::Approx(-h));
    CHECK(m2.y == doctest::Approx(-h));

    CHECK_THROWS_AS(arc_midpoint(kUnit, {5, 0}, {0, 1}, {-1, 0}), Error);

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Circle c{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.5, 2.0)};
        Point a = on_circle_at(c, rng.uniform(0, 6.28));
        Point b = on_circle_at(c, rng.uniform(0, 6.28));
        Point avoid = on_circle_at(c, rng.uniform(0, 6.28));
        if (dist(a, b) < 0.2 || dist(avoid, a) < 0.2 || dist(avoid, b) < 0.2) continue;
        Point mid = arc_midpoint(c, a, b, avoid);
        CHECK(dist(mid, a) == doctest::Approx(dist(mid, b)).epsilon(1e-10));
        CHECK(std::abs(power_of_point(mid, c)) < 1e-9);
    }
}
