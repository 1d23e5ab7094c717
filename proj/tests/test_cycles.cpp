#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharygin/cycles.hpp"
#include "sharygin/error.hpp"
#include "sharygin/rng.hpp"

using namespace sharygin;

namespace {
Cycle random_cycle(Rng& rng) {
    return {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-3, 3)};
}
} // namespace

TEST_CASE("sigma embedding") {
    Cycle c{2, 3, 0};
    MPoint m = sigma(c);
    CHECK(m.x == 2.0);
    CHECK(m.y == 3.0);
    CHECK(m.z == 0.0);
    Cycle back = sigma_inv(sigma(Cycle{0.5, -1.25, 2.0}));
    CHECK(back.x == 0.5);
    CHECK(back.r == 2.0);
}

TEST_CASE("squared interval") {
    CHECK(q(Cycle{0, 0, 1}, Cycle{3, 0, 1}) == doctest::Approx(9.0));
    CHECK(q(Cycle{0, 0, 1}, Cycle{2, 0, -1}) == doctest::Approx(0.0));
    CHECK(q(Cycle{1, 2, -0.5}, Cycle{1, 2, -0.5}) == 0.0);
}

TEST_CASE("oriented tangency") {
    // External tangency with opposite orientations.
    CHECK(tangent_cycles(Cycle{0, 0, 1}, Cycle{2, 0, -1}));
    // Same orientation at the same distance: q = 4.
    CHECK_FALSE(tangent_cycles(Cycle{0, 0, 1}, Cycle{2, 0, 1}));
    // Internal tangency with matching orientation.
    CHECK(tangent_cycles(Cycle{0, 0, 2}, Cycle{1, 0, 1}));
    // q = 0 alone is not enough: concentric opposite pair has q = -4r^2 (not 0),
    // but a crossing pair with q = 0 and no geometric tangency must fail.
    // d^2 = 1, (r1-r2)^2 = 1 with r1 = 2, r2 = 1 gives a genuine tangency, so
    // build a q=0 pair that is *not* tangent: impossible for circles, so the
    // guard is exercised through point cycles instead.
    CHECK_FALSE(tangent_cycles(Cycle{0, 0, 0}, Cycle{3, 0, 0})); // two points, q = 9
    CHECK(tangent_cycles(Cycle{1, 0, 0}, Cycle{0, 0, 1}));       // incident point
}

TEST_CASE("tangent length") {
    CHECK(tangent_length(Cycle{0, 0, 1}, Cycle{3, 0, 1}) == doctest::Approx(3.0));
    CHECK(tangent_length(Cycle{0, 0, 1}, Cycle{2, 0, -1}) == doctest::Approx(0.0));
    CHECK(tangent_length(Cycle{0, 0, 1}, Cycle{5, 0, -2}) == doctest::Approx(4.0));
    CHECK_THROWS_AS(tangent_length(Cycle{0, 0, 2}, Cycle{0.2, 0, -1.9}), Error);
}

TEST_CASE("inflation") {
    Cycle c = inflate(Cycle{0, 0, 1}, 2.0);
    CHECK(c.r == 3.0);
    Cycle p = inflate(Cycle{1, 1, 0}, 0.7);
    CHECK(p.r == doctest::Approx(0.7)); // a point becomes a clockwise cycle

    Axis a = Axis::through({0, 0}, {1, 0});
    Axis ai = inflate(a, 1.0);
    // Left of +x is +y: the image is the line y = 1.
    CHECK(std::abs(ai.line().signed_dist({0, 1})) < 1e-15);
    CHECK(std::abs(ai.line().signed_dist({5, 1})) < 1e-15);

    // sigma conjugates inflation to translation by (0,0,rho), exactly.
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        Cycle x = random_cycle(rng);
        double rho = rng.uniform(-2, 2);
        MPoint lhs = sigma(inflate(x, rho));
        MPoint rhs = sigma(x);
        CHECK(lhs.x == rhs.x);
        CHECK(lhs.y == rhs.y);
        CHECK(lhs.z == rhs.z + rho);
    }
}

TEST_CASE("inflation preserves oriented tangency") {
    Rng rng(73);
    for (int i = 0; i < 500; ++i) {
        // Construct a tangent pair by design: touch c1 at angle phi.
        Cycle c1 = random_cycle(rng);
        if (std::abs(c1.r) < 0.1) c1.r = 0.5;
        double phi = rng.uniform(0, 6.28);
        double r2 = rng.uniform(-2.5, 2.5);
        Point n{std::cos(phi), std::sin(phi)};
        // Oriented tangency: centers at distance |r1 - r2| along n when the
        // orientations agree at the contact point (q = (r1-r2)^2 - (r1-r2)^2 = 0).
        Point ctr = c1.center() + n * (c1.r - r2);
        Cycle c2{ctr.x, ctr.y, r2};
        if (std::abs(c1.r - r2) < 0.05) continue;
        REQUIRE(tangent_cycles(c1, c2));
        double rho = rng.uniform(-1.5, 1.5);
        if (std::abs(c1.r + rho) < 0.05 || std::abs(r2 + rho) < 0.05) continue;
        CHECK(tangent_cycles(inflate(c1, rho), inflate(c2, rho)));
    }
}

TEST_CASE("Lorentz cycle map") {
    Cycle id = lorentz(0.0, Cycle{1.25, -2, 0.5});
    CHECK(id.x == doctest::Approx(1.25));
    CHECK(id.r == doctest::Approx(0.5));

    Cycle b = lorentz(0.6, Cycle{0, 0, 1});
    CHECK(b.x == doctest::Approx(-0.75));
    CHECK(b.y == doctest::Approx(0.0));
    CHECK(b.r == doctest::Approx(1.25));

    // Tangency of the frozen pair survives the boost.
    Cycle t1 = lorentz(0.6, Cycle{0, 0, 1});
    Cycle t2 = lorentz(0.6, Cycle{2, 0, -1});
    CHECK(t2.x == doctest::Approx(3.25));
    CHECK(t2.r == doctest::Approx(-2.75));
    CHECK(q(t1, t2) == doctest::Approx(0.0));

    CHECK_THROWS_AS(lorentz(1.0, Cycle{0, 0, 1}), Error);
    CHECK_THROWS_AS(lorentz(-1.3, Cycle{0, 0, 1}), Error);
}

TEST_CASE("q-invariance under boosts") {
    Rng rng(79);
    const double speeds[] = {0.1, -0.1, 0.5, -0.5, 0.9, -0.9};
    for (int i = 0; i < 1000; ++i) {
        Cycle a = random_cycle(rng), b = random_cycle(rng);
        double qv = q(a, b);
        for (double v : speeds) {
            double qb = q(lorentz(v, a), lorentz(v, b));
            CHECK(std::abs(qb - qv) <= 1e-12 * std::max({std::abs(qv), norm2(a.center()), 1.0}) * 100);
        }
    }
}

TEST_CASE("velocity-addition composition") {
    Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        Cycle c = random_cycle(rng);
        double v = rng.uniform(-0.95, 0.95), w = rng.uniform(-0.95, 0.95);
        Cycle lhs = lorentz(v, lorentz(w, c));
        Cycle rhs = lorentz(boost_compose(v, w), c);
        double scale = std::max({std::abs(c.x), std::abs(c.r), 1.0}) * 100;
        CHECK(std::abs(lhs.x - rhs.x) <= 1e-12 * scale);
        CHECK(std::abs(lhs.y - rhs.y) <= 1e-12 * scale);
        CHECK(std::abs(lhs.r - rhs.r) <= 1e-12 * scale);
    }
}

TEST_CASE("radical axis x = 0 is preserved") {
    Rng rng(89);
    for (int i = 0; i < 300; ++i) {
        Cycle c = random_cycle(rng);
        double v = rng.uniform(-0.95, 0.95);
        Cycle b = lorentz(v, c);
        double before = c.x * c.x + c.y * c.y - c.r * c.r;
        double after = b.x * b.x + b.y * b.y - b.r * b.r;
        CHECK(std::abs(after - before) <= 1e-12 * std::max(std::abs(before), 1.0) * 100);
    }
}
