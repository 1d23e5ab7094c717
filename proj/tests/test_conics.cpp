#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharygin/conics.hpp"
#include "sharygin/error.hpp"
#include "sharygin/rng.hpp"

using namespace sharygin;

namespace {

ConicQ random_conic(Rng& rng) {
    ConicQ q;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) q.m(i, j) = q.m(j, i) = rng.uniform(-1, 1);
    return q.canonical();
}

ConicQ combo(const ConicQ& a, const ConicQ& b, double s, double t) {
    ConicQ q;
    q.m = s * a.m + t * b.m;
    return q;
}

} // namespace

TEST_CASE("line pairs and double lines") {
    ConicQ xy = line_pair(Line::make(1, 0, 0), Line::make(0, 1, 0));
    CHECK(xy.eval({0, 3}) == doctest::Approx(0.0));
    CHECK(xy.eval({-2, 0}) == doctest::Approx(0.0));
    CHECK(xy.eval({1, 1}) != doctest::Approx(0.0));

    Line l = Line::make(2, -1, 0.5);
    ConicQ lp = line_pair(l, l);
    ConicQ dl = double_line(l);
    CHECK((lp.canonical().m - dl.canonical().m).norm() < 1e-14);

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(dl.m);
    CHECK(svd.singularValues()(1) < 1e-14); // rank one
    CHECK(std::abs(dl.eval(l.point())) < 1e-14);
}

TEST_CASE("circle to conic round trip") {
    ConicQ unit = conic_from_circle(Circle{{0, 0}, 1});
    Eigen::Matrix3d expect;
    expect << 1, 0, 0, 0, 1, 0, 0, 0, -1;
    CHECK((unit.canonical().m - (expect / expect.norm())).norm() < 1e-14);

    Circle c{{0.7, -1.3}, 2.25};
    Circle back = circle_from_conic(conic_from_circle(c));
    CHECK(dist(back.center, c.center) < 1e-12);
    CHECK(std::abs(back.radius - c.radius) < 1e-12);

    ConicQ ellipse;
    ellipse.m << 1, 0, 0, 0, 4, 0, 0, 0, -1;
    CHECK_THROWS_AS(circle_from_conic(ellipse), Error);
}

TEST_CASE("two-pencil intersection") {
    Rng rng(97);
    // Shared member: c1 = f12 and a generic f23 pin the intersection to c1.
    {
        ConicQ c1 = random_conic(rng), c3 = random_conic(rng);
        ConicQ f23 = combo(random_conic(rng), c1, 0.4, 0.6);
        ConicQ out = conic_pencil_lemma(c1, c3, c1, f23);
        CHECK((out.canonical().m - c1.canonical().m).norm() < 1e-10);
    }
    // Random generic instances: F12 in pencil(C1,C2), F23 in pencil(C2,C3).
    for (int i = 0; i < 300; ++i) {
        ConicQ c1 = random_conic(rng), c2 = random_conic(rng), c3 = random_conic(rng);
        ConicQ f12 = combo(c1, c2, rng.uniform(0.2, 1.0), rng.uniform(0.2, 1.0));
        ConicQ f23 = combo(c2, c3, rng.uniform(0.2, 1.0), rng.uniform(0.2, 1.0));
        ConicQ f13 = conic_pencil_lemma(c1, c3, f12, f23);
        CHECK(span_residual(f13, c1, c3) < 1e-10);
        CHECK(span_residual(f13, f12, f23) < 1e-10);
    }
    // Unrelated spans generically miss each other.
    int caught = 0;
    for (int i = 0; i < 10; ++i) {
        try {
            conic_pencil_lemma(random_conic(rng), random_conic(rng), random_conic(rng),
                               random_conic(rng));
        } catch (const Error& e) {
            if (e.code() == "NoIntersection") ++caught;
        }
    }
    CHECK(caught == 10);
}

TEST_CASE("four concyclic points: degenerate members are linearly dependent") {
    Rng rng(101);
    for (int i = 0; i < 50; ++i) {
        Circle c{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.8, 2.0)};
        double ang[4];
        for (double& a : ang) a = rng.uniform(0, 6.28);
        std::sort(std::begin(ang), std::end(ang));
        if (ang[1] - ang[0] < 0.25 || ang[2] - ang[1] < 0.25 || ang[3] - ang[2] < 0.25) continue;
        Point p[4];
        for (int k = 0; k < 4; ++k)
            p[k] = c.center + Point{std::cos(ang[k]), std::sin(ang[k])} * c.radius;
        const Point &a = p[0], &b = p[1], &cc = p[2], &d = p[3];
        ConicQ ab_cd = line_pair(Line::through(a, b), Line::through(cc, d));
        ConicQ ac_bd = line_pair(Line::through(a, cc), Line::through(b, d));
        ConicQ ad_bc = line_pair(Line::through(a, d), Line::through(b, cc));
        CHECK(span_residual(ad_bc, ab_cd, ac_bd) < 1e-10);

        // Witness evaluation: the span member through one extra point of AD
        // vanishes exactly where AD*BC does.
        Point w = a + (d - a) * 0.37;
        double lam = ac_bd.eval(w), mu = -ab_cd.eval(w);
        ConicQ f13 = combo(ab_cd, ac_bd, lam, mu);
        for (const Point& witness :
             {a + (d - a) * 0.8, b + (cc - b) * 0.31, b + (cc - b) * 0.77, a, d}) {
            double scale = f13.m.norm() * (1.0 + norm2(witness));
            CHECK(std::abs(f13.eval(witness)) < 1e-9 * scale);
        }
    }
}

TEST_CASE("conic center and axes") {
    ConicQ e;
    e.m << 0.25, 0, 0, 0, 1, 0, 0, 0, -1; // x^2/4 + y^2 = 1
    Point c = conic_center(e);
    CHECK(std::abs(c.x) < 1e-14);
    CHECK(std::abs(c.y) < 1e-14);
    auto [a1, a2] = conic_axes(e);
    // Axes are the coordinate lines.
    CHECK(std::abs(a1.signed_dist({3, 0})) < 1e-12);
    CHECK(std::abs(a2.signed_dist({0, 3})) < 1e-12);

    // Rotated by 45 degrees: axes along (1, 1) and (1, -1).
    ConicQ r;
    double ct = std::cos(0.7853981633974483), st = std::sin(0.7853981633974483);
    Eigen::Matrix3d rot;
    rot << ct, st, 0, -st, ct, 0, 0, 0, 1;
    r.m = rot.transpose() * e.m * rot;
    auto [b1, b2] = conic_axes(r);
    CHECK(std::abs(std::abs(dot(b1.direction(), normalized(Point{1, 1})))) ==
          doctest::Approx(1.0));
    CHECK(std::abs(std::abs(dot(b2.direction(), normalized(Point{1, -1})))) ==
          doctest::Approx(1.0));
    CHECK(std::abs(dot(b1.direction(), b2.direction())) < 1e-12);

    ConicQ degenerate = double_line(Line::make(1, 0, 0));
    CHECK_THROWS_AS(conic_center(degenerate), Error);
}

TEST_CASE("bitangent circles on a symmetry axis") {
    // Circle conic: only the concentric bitangent circle at t = 0.
    ConicQ circ = conic_from_circle(Circle{{0, 0}, 2});
    Circle b0 = bitangent_circle_on_axis(circ, 0.0, 1);
    CHECK(b0.radius == doctest::Approx(2.0));
    auto [p0a, p0b] = bitangent_contacts(circ, 0.0, 1);
    CHECK(dist(p0a, p0b) == doctest::Approx(4.0)); // antipodal contacts
    CHECK_THROWS_AS(bitangent_circle_on_axis(circ, 0.5, 1), Error);

    // Ellipse x^2/4 + y^2 = 1, center on the major axis.
    ConicQ e;
    e.m << 0.25, 0, 0, 0, 1, 0, 0, 0, -1;
    Rng rng(103);
    for (int i = 0; i < 50; ++i) {
        double t = rng.uniform(-1.4, 1.4); // inside the evolute window c^2/a = 1.5
        int axis = 1;
        Circle bc = bitangent_circle_on_axis(e, t, axis);
        auto [u, v] = bitangent_contacts(e, t, axis);
        // Contact points lie on the conic and on the circle.
        CHECK(std::abs(e.eval(u)) < 1e-10);
        CHECK(std::abs(e.eval(v)) < 1e-10);
        CHECK(std::abs(dist(u, bc.center) - bc.radius) < 1e-10);
        CHECK(std::abs(dist(v, bc.center) - bc.radius) < 1e-10);
        // Normals are parallel at contact: the gradient and the radius vector.
        CHECK(std::abs(cross(normalized(e.gradient(u)), normalized(u - bc.center))) < 1e-8);
        CHECK(std::abs(cross(normalized(e.gradient(v)), normalized(v - bc.center))) < 1e-8);
        // The contact chord is perpendicular to the chosen axis.
        CHECK(std::abs(dot(normalized(u - v), Point{1, 0})) < 1e-12);
    }
    // Minor axis windows work too.
    Circle bm = bitangent_circle_on_axis(e, 1.0, 2);
    auto [mu, mv] = bitangent_contacts(e, 1.0, 2);
    CHECK(std::abs(e.eval(mu)) < 1e-10);
    CHECK(std::abs(dist(mv, bm.center) - bm.radius) < 1e-10);
}

TEST_CASE("locus of centers of one-internal-one-external tangent circles") {
    // w1 inside w: sum of focal distances is r + r1.
    Circle w{{0, 0}, 3}, w1{{1, 0}, 1};
    TangentCenterLocus locus = tangent_center_locus(w, w1);
    CHECK(locus.length_sum == doctest::Approx(4.0));
    CHECK(locus.focus1.x == doctest::Approx(0.0));
    CHECK(locus.focus2.x == doctest::Approx(1.0));

    Rng rng(107);
    for (int k = 0; k < 20; ++k) {
        Point p = locus.at(rng.uniform(0, 6.28));
        CHECK(dist(p, w.center) + dist(p, w1.center) == doctest::Approx(4.0));
        double rho = locus.tangent_radius(p, w);
        Circle g{p, rho};
        Tangency tw = tangency(GObject{g}, GObject{w}, Tol{1e-7, 1e-7});
        Tangency tw1 = tangency(GObject{g}, GObject{w1}, Tol{1e-7, 1e-7});
        CHECK(tw != Tangency::None);
        CHECK(tw1 != Tangency::None);
        CHECK(((tw == Tangency::Internal) != (tw1 == Tangency::Internal)));
    }

    // Concentric circles degenerate to the midway circle.
    TangentCenterLocus conc = tangent_center_locus(Circle{{0, 0}, 3}, Circle{{0, 0}, 1});
    Point q = conc.at(1.234);
    CHECK(norm(q) == doctest::Approx(2.0));

    CHECK_THROWS_AS(tangent_center_locus(Circle{{0, 0}, 1}, Circle{{5, 0}, 1}), Error);
}
