#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharygin/error.hpp"
#include "sharygin/pencil.hpp"
#include "sharygin/rng.hpp"

using namespace sharygin;

namespace {

const Circle kUnit{{0.0, 0.0}, 1.0};

// Random non-intersecting pair: separated or nested, generic proportions.
struct PairGen {
    Circle c1, c2;
};

PairGen random_pair(Rng& rng) {
    PairGen g;
    g.c1 = Circle{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.7, 1.5)};
    if (rng.coin()) {
        double r2 = rng.uniform(0.4, 1.2);
        double d = g.c1.radius + r2 + rng.uniform(0.3, 2.0);
        double ang = rng.uniform(0, 6.28);
        g.c2 = Circle{g.c1.center + Point{std::cos(ang), std::sin(ang)} * d, r2};
    } else {
        double r2 = g.c1.radius * rng.uniform(0.15, 0.45);
        double d = rng.uniform(0.1, 0.85) * (g.c1.radius - r2);
        double ang = rng.uniform(0, 6.28);
        g.c2 = Circle{g.c1.center + Point{std::cos(ang), std::sin(ang)} * d, r2};
    }
    return g;
}

} // namespace

TEST_CASE("pencil member endpoints and concentric members") {
    Pencil p = Pencil::make(kUnit, Circle{{0, 0}, 2});
    CircleEq m0 = pencil_member(p, 0.0);
    CHECK(m0.eval({1, 0}) == doctest::Approx(0.0));
    CircleEq m1 = pencil_member(p, 1.0);
    CHECK(m1.eval({2, 0}) == doctest::Approx(0.0));
    CHECK(pencil_member(p, std::numeric_limits<double>::infinity()).d == m1.d);

    // Members of a concentric pencil stay concentric.
    CircleEq mid = pencil_member(p, 0.4);
    CHECK(mid.center().x == doctest::Approx(0.0));
    CHECK(mid.center().y == doctest::Approx(0.0));
}

TEST_CASE("pencil members share the radical axis") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        PairGen g = random_pair(rng);
        Pencil p = Pencil::make(g.c1, g.c2);
        Line expected = radical_axis(g.c1, g.c2);
        double t = rng.uniform(-2, 2);
        CircleEq m = pencil_member(p, t);
        if (m.is_line() || m.radius2() < 1e-4) continue;
        Line got = radical_axis(g.c1, m.to_circle());
        CHECK(line_residual(got, expected) < 1e-8);
    }
}

TEST_CASE("limiting points of the standard pair") {
    // Unit circles at distance 3: pencil parameter roots of 9t^2 - 9t + 1.
    LimitingPair lim = sharygin_points(kUnit, Circle{{3, 0}, 1});
    const double s5 = std::sqrt(5.0);
    CHECK(lim.s.x == doctest::Approx((3.0 - s5) / 2.0).epsilon(1e-14));
    CHECK(lim.s.y == doctest::Approx(0.0));
    CHECK(lim.s_prime.x == doctest::Approx((3.0 + s5) / 2.0).epsilon(1e-14));

    // Both are radius-zero members: their point-circle lies in the pencil.
    Pencil p = Pencil::make(kUnit, Circle{{3, 0}, 1});
    CircleEq at_s = member_through_point(p, lim.s);
    CHECK(std::abs(at_s.radius2()) < 1e-12);

    LimitingPair conc = sharygin_points(kUnit, Circle{{0, 0}, 2});
    CHECK(conc.s.x == doctest::Approx(0.0));
    CHECK(conc.s_prime.x == doctest::Approx(0.0));

    CHECK_THROWS_AS(sharygin_points(kUnit, Circle{{1, 0}, 1}), Error);
}

TEST_CASE("limiting points are mutually inverse in both circles") {
    Rng rng(43);
    Tol tol;
    for (int i = 0; i < 200; ++i) {
        PairGen g = random_pair(rng);
        LimitingPair lim = sharygin_points(g.c1, g.c2);
        for (const Circle& c : {g.c1, g.c2}) {
            GObject img = invert(c.center, c.radius * c.radius, GObject{lim.s});
            const Point& q = std::get<Point>(img);
            CHECK(dist(q, lim.s_prime) < tol.eps(c.radius) * 100);
        }
    }
}

TEST_CASE("limiting points: symmetry and rigid-motion equivariance") {
    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        PairGen g = random_pair(rng);
        LimitingPair a = sharygin_points(g.c1, g.c2);
        LimitingPair b = sharygin_points(g.c2, g.c1);
        CHECK(dist(a.s, b.s) < 1e-9);
        CHECK(dist(a.s_prime, b.s_prime) < 1e-9);

        double ang = rng.uniform(0, 6.28);
        Point shift{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        auto move = [&](const Point& p) {
            return Point{p.x * std::cos(ang) - p.y * std::sin(ang),
                         p.x * std::sin(ang) + p.y * std::cos(ang)} +
                   shift;
        };
        LimitingPair m = sharygin_points(Circle{move(g.c1.center), g.c1.radius},
                                         Circle{move(g.c2.center), g.c2.radius});
        Point ms = move(a.s), msp = move(a.s_prime);
        if (!lex_less(ms, msp)) std::swap(ms, msp);
        CHECK(dist(m.s, ms) < 1e-8);
        CHECK(dist(m.s_prime, msp) < 1e-8);
    }
}

TEST_CASE("member through a point") {
    Pencil p = Pencil::make(kUnit, Circle{{3, 0}, 1});
    CircleEq m = member_through_point(p, {0, 1});
    CHECK(std::abs(m.canonical().eval({0, 1})) < 1e-12);

    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        PairGen g = random_pair(rng);
        Pencil pp = Pencil::make(g.c1, g.c2);
        Point pt{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        Line ax = radical_axis(g.c1, g.c2);
        if (std::abs(ax.signed_dist(pt)) < 0.05) continue;
        CircleEq mm = member_through_point(pp, pt);
        CHECK(std::abs(mm.canonical().eval(pt)) < 1e-9);
    }

    // Points of the radical axis admit no unique member.
    Line ax = radical_axis(kUnit, Circle{{3, 0}, 1});
    CHECK_THROWS_AS(member_through_point(p, ax.point()), Error);
}

TEST_CASE("members tangent to a line") {
    // Concentric pencil: the member tangent to x = 2 is the radius-2 circle.
    Pencil conc = Pencil::make(kUnit, Circle{{0, 0}, 3});
    auto ms = member_tangent_to_line(conc, Line::make(1, 0, -2));
    REQUIRE(ms.size() >= 1);
    bool found = false;
    for (const CircleEq& m : ms)
        if (std::abs(std::sqrt(m.radius2()) - 2.0) < 1e-10) found = true;
    CHECK(found);

    // The radical axis of a non-intersecting pencil touches no member.
    Pencil p = Pencil::make(kUnit, Circle{{3, 0}, 1});
    CHECK(member_tangent_to_line(p, radical_axis(kUnit, Circle{{3, 0}, 1})).empty());
}

TEST_CASE("tangent members agree with a dense parameter scan") {
    Rng rng(59);
    for (int i = 0; i < 40; ++i) {
        PairGen g = random_pair(rng);
        Pencil p = Pencil::make(g.c1, g.c2);
        Point lp{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        double ang = rng.uniform(0, 3.14);
        Line l = Line::from_point_normal(lp, {std::cos(ang), std::sin(ang)});

        auto roots = tangent_member_params(p, l);
        // Brute-force bracket scan of f(t) = dist(center, l)^2 - radius^2.
        auto f = [&](double t) {
            CircleEq m = pencil_member(p, t);
            double sd = l.signed_dist(m.center());
            return sd * sd - m.radius2();
        };
        std::vector<double> brute;
        const double lo = -50, hi = 50;
        const int n = 10000;
        double prev = f(lo);
        for (int k = 1; k <= n; ++k) {
            double t = lo + (hi - lo) * k / n;
            double cur = f(t);
            if (prev == 0.0 || (prev < 0) != (cur < 0)) {
                double a = lo + (hi - lo) * (k - 1) / n, b = t;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (a + b);
                    if ((f(a) < 0) != (f(mid) < 0))
                        b = mid;
                    else
                        a = mid;
                }
                brute.push_back(0.5 * (a + b));
            }
            prev = cur;
        }
        for (double tb : brute) {
            double best = 1e9;
            for (double tr : roots) best = std::min(best, std::abs(tr - tb));
            CHECK(best < 1e-8 * std::max(1.0, std::abs(tb)));
        }
        // Every reported member is genuinely tangent.
        for (const CircleEq& m : member_tangent_to_line(p, l)) {
            Circle c = m.to_circle();
            CHECK(std::abs(std::abs(l.signed_dist(c.center)) - c.radius) < 1e-8);
        }
    }
}

TEST_CASE("pencil ratio lemma") {
    // Ratio 1 on the locus |PS|^2 = pow(P).
    Circle c{{2, 0}, 1};
    Point s{0, 0};
    // A point with equal power and squared distance: x^2 = (x-2)^2 - 1 -> x = 3/4.
    Point p{0.75, 0};
    CHECK(in_pencil_ratio(p, s, c) == doctest::Approx(1.0));

    // Two points of one member have equal ratios.
    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        PairGen g = random_pair(rng);
        LimitingPair lim = sharygin_points(g.c1, g.c2);
        Pencil p2 = Pencil::make(CircleEq::point_circle(lim.s), CircleEq::of(g.c2));
        Point probe{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        Line ax = radical_axis(Circle{lim.s, 1e-9}, g.c2);
        if (std::abs(ax.signed_dist(probe)) < 0.05) continue;
        CircleEq m = member_through_point(p2, probe);
        if (m.is_line() || m.radius2() < 1e-4) continue;
        Circle mc = m.to_circle();
        Point u = mc.center + Point{mc.radius, 0};
        Point v = mc.center + Point{0, mc.radius};
        if (std::abs(power_of_point(u, g.c2)) < 1e-3) continue;
        if (std::abs(power_of_point(v, g.c2)) < 1e-3) continue;
        double ru = in_pencil_ratio(u, lim.s, g.c2);
        double rv = in_pencil_ratio(v, lim.s, g.c2);
        CHECK(ru == doctest::Approx(rv).epsilon(1e-8));
    }

    // Tangent-length identity: pow(A) = |XA|^2 for AB tangent at X.
    Circle w2{{0, 0}, 1};
    Point x{0, 1};
    Point a{-1.7, 1}, b{2.3, 1};
    CHECK(power_of_point(a, w2) == doctest::Approx(norm2(x - a)));
    CHECK(power_of_point(b, w2) == doctest::Approx(norm2(x - b)));

    CHECK_THROWS_AS(in_pencil_ratio({1, 0}, {0, 0}, kUnit), Error);
}

TEST_CASE("polar coincidence and concentric inversion at a limiting point") {
    Rng rng(67);
    Tol tol;
    for (int i = 0; i < 200; ++i) {
        PairGen g = random_pair(rng);
        LimitingPair lim = sharygin_points(g.c1, g.c2);
        for (const Point& s : {lim.s, lim.s_prime}) {
            const Point& sp = (dist(s, lim.s) == 0.0) ? lim.s_prime : lim.s;
            Line p1 = polar(s, g.c1, tol);
            Line p2 = polar(s, g.c2, tol);
            CHECK(line_residual(p1, p2) < 1e-8);
            // The common polar passes through the other limiting point and is
            // perpendicular to the line of centers.
            CHECK(std::abs(p1.signed_dist(sp)) < 1e-8);
            CHECK(std::abs(cross(p1.normal(), normalized(g.c2.center - g.c1.center))) < 1e-8);

            // Inversion at a limiting point makes the pair concentric.
            const Circle i1 = std::get<Circle>(invert(s, 1.0, GObject{g.c1}));
            const Circle i2 = std::get<Circle>(invert(s, 1.0, GObject{g.c2}));
            double scale = std::max(norm(i1.center - s), i1.radius);
            CHECK(dist(i1.center, i2.center) < 1e-8 * std::max(scale, 1.0));
        }
    }
}
