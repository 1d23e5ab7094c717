#include "sharygin/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "sharygin/error.hpp"

namespace sharygin {

CircleEq CircleEq::of(const Circle& c) {
    return {1.0, -2.0 * c.center.x, -2.0 * c.center.y, norm2(c.center) - c.radius * c.radius};
}

CircleEq CircleEq::of(const Line& l) { return {0.0, l.a, l.b, l.c}; }

CircleEq CircleEq::point_circle(const Point& p) {
    return {1.0, -2.0 * p.x, -2.0 * p.y, norm2(p)};
}

bool CircleEq::is_line(const Tol& tol) const {
    const double scale = std::max({std::abs(b), std::abs(c), std::abs(d)});
    return tol.zero(a, scale);
}

Circle CircleEq::to_circle(const Tol& tol) const {
    if (is_line(tol)) fail("NotACircle", "equation has no quadratic part");
    const double r2 = radius2();
    if (r2 <= 0.0) fail("NotACircle", "radius squared is not positive");
    return Circle{center(), std::sqrt(r2)};
}

Line CircleEq::to_line(const Tol& tol) const {
    if (!is_line(tol)) fail("NotACircle", "equation has a quadratic part");
    return Line::make(b, c, d);
}

CircleEq CircleEq::canonical() const {
    const double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (m == 0.0) fail("InvalidCircleEq", "all coefficients vanish");
    double lead = a;
    for (double v : {b, c, d})
        if (std::abs(v) > std::abs(lead)) lead = v;
    return {a / lead, b / lead, c / lead, d / lead};
}

Pencil Pencil::make(const CircleEq& e1, const CircleEq& e2, const Tol& tol) {
    // Rank check on the 2x4 coefficient matrix.
    double g11 = 0, g12 = 0, g22 = 0;
    const double v1[4] = {e1.a, e1.b, e1.c, e1.d};
    const double v2[4] = {e2.a, e2.b, e2.c, e2.d};
    for (int i = 0; i < 4; ++i) {
        g11 += v1[i] * v1[i];
        g12 += v1[i] * v2[i];
        g22 += v2[i] * v2[i];
    }
    const double gram = g11 * g22 - g12 * g12;
    if (tol.zero(gram, g11 * g22)) fail("DependentPencil", "generators are proportional");
    return Pencil{e1, e2};
}

Pencil Pencil::make(const Circle& c1, const Circle& c2, const Tol& tol) {
    return make(CircleEq::of(c1), CircleEq::of(c2), tol);
}

CircleEq pencil_member(const Pencil& p, double t) {
    if (std::isinf(t)) return p.e2;
    const double s = 1.0 - t;
    return {s * p.e1.a + t * p.e2.a, s * p.e1.b + t * p.e2.b, s * p.e1.c + t * p.e2.c,
            s * p.e1.d + t * p.e2.d};
}

LimitingPair sharygin_points(const Circle& c1, const Circle& c2, const Tol& tol) {
    const double d = dist(c1.center, c2.center);
    const double scale = std::max({c1.radius, c2.radius, d});
    const bool separated = d > c1.radius + c2.radius + tol.eps(scale);
    const bool nested = d < std::abs(c1.radius - c2.radius) - tol.eps(scale);
    const bool concentric = tol.zero(d, scale);
    if (!separated && !nested && !concentric)
        fail("IntersectingCircles", "limiting points are complex for meeting circles");
    if (concentric) return {c1.center, c1.center};

    const CircleEq e1 = CircleEq::of(c1);
    const CircleEq e2 = CircleEq::of(c2);
    const double db = e2.b - e1.b, dc = e2.c - e1.c, dd = e2.d - e1.d;
    // Radius-zero condition b(t)^2 + c(t)^2 - 4 d(t) = 0 as A t^2 + B t + C.
    const double qa = db * db + dc * dc;
    const double qb = 2.0 * (e1.b * db + e1.c * dc) - 4.0 * dd;
    const double qc = e1.b * e1.b + e1.c * e1.c - 4.0 * e1.d;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) fail("IntersectingCircles", "radius-zero quadratic has no real roots");
    const double root = std::sqrt(disc);
    const double q = -0.5 * (qb + (qb >= 0.0 ? root : -root));
    const double t1 = q / qa;
    const double t2 = qc / q;

    auto center_at = [&](double t) {
        const CircleEq m = pencil_member(Pencil{e1, e2}, t);
        return m.center();
    };
    Point s = center_at(t1), sp = center_at(t2);
    if (!lex_less(s, sp)) std::swap(s, sp);
    return {s, sp};
}

CircleEq member_through_point(const Pencil& p, const Point& pt, const Tol& tol) {
    const double v1 = p.e1.eval(pt);
    const double v2 = p.e2.eval(pt);
    const double scale = std::max(std::abs(v1), std::abs(v2));
    if (tol.zero(v1 - v2, std::max(scale, 1.0)) && !tol.zero(v1, std::max(scale, 1.0)))
        fail("OnRadicalAxis", "no unique pencil member through this point");
    if (tol.zero(v1, std::max(scale, 1.0)) && tol.zero(v2, std::max(scale, 1.0)))
        return p.e1; // point common to every member
    return pencil_member(p, v1 / (v1 - v2));
}

std::vector<double> tangent_member_params(const Pencil& p, const Line& l, const Tol& tol) {
    // With member coefficients linear in t, (l.a b + l.b c - 2 a l.c)^2 =
    // b^2 + c^2 - 4 a d is a polynomial of degree <= 2 in t.
    const double b0 = p.e1.b, c0 = p.e1.c, a0 = p.e1.a, d0 = p.e1.d;
    const double db = p.e2.b - b0, dc = p.e2.c - c0, da = p.e2.a - a0, dd = p.e2.d - d0;
    // u(t) = l.a*b(t) + l.b*c(t) - 2*a(t)*l.c  (linear in t)
    const double u0 = l.a * b0 + l.b * c0 - 2.0 * a0 * l.c;
    const double u1 = l.a * db + l.b * dc - 2.0 * da * l.c;
    // s(t) = b^2 + c^2 - 4ad, quadratic with coefficients:
    const double s2 = db * db + dc * dc - 4.0 * da * dd;
    const double s1 = 2.0 * (b0 * db + c0 * dc) - 4.0 * (a0 * dd + da * d0);
    const double s0 = b0 * b0 + c0 * c0 - 4.0 * a0 * d0;
    const double qa = u1 * u1 - s2;
    const double qb = 2.0 * u0 * u1 - s1;
    const double qc = u0 * u0 - s0;

    const double mag = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
    std::vector<double> roots;
    if (mag == 0.0) return roots;
    if (tol.zero(qa, mag)) {
        if (!tol.zero(qb, mag)) roots.push_back(-qc / qb);
        return roots;
    }
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return roots;
    const double root = std::sqrt(disc);
    const double q = -0.5 * (qb + (qb >= 0.0 ? root : -root));
    roots.push_back(q / qa);
    if (root > 0.0) roots.push_back(qc / q);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<CircleEq> member_tangent_to_line(const Pencil& p, const Line& l, const Tol& tol) {
    std::vector<CircleEq> out;
    for (double t : tangent_member_params(p, l, tol)) {
        const CircleEq m = pencil_member(p, t);
        if (m.is_line(tol)) continue;
        const double r2 = m.radius2();
        const double scale = std::max(1.0, norm2(m.center()));
        if (r2 <= tol.eps(scale)) continue; // point member, not a real circle
        out.push_back(m);
    }
    return out;
}

double in_pencil_ratio(const Point& p, const Point& s, const Circle& c, const Tol& tol) {
    const double denom = power_of_point(p, c);
    if (tol.zero(denom, c.radius * c.radius)) fail("ZeroDenominator", "point lies on the circle");
    return norm2(p - s) / denom;
}

} // namespace sharygin
