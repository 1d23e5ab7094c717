#include "sharygin/geom.hpp"

#include <algorithm>
#include <cmath>

#include "sharygin/error.hpp"

namespace sharygin {

namespace {
// Sign threshold for the canonical-line rule. Lines are unit-normalized, so
// |a| below this means "a is zero" for the purpose of choosing the sign.
constexpr double kCanonEps = 1e-12;

void sort_lex(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return lex_less(p, q); });
}
} // namespace

Line Line::make(double a, double b, double c) {
    const double h = std::hypot(a, b);
    if (h == 0.0 || !std::isfinite(h)) fail("InvalidLine", "line normal is zero or non-finite");
    a /= h;
    b /= h;
    c /= h;
    const bool flip = (a < -kCanonEps) || (std::abs(a) <= kCanonEps && b < 0.0);
    if (flip) {
        a = -a;
        b = -b;
        c = -c;
    }
    Line l;
    l.a = a;
    l.b = b;
    l.c = c;
    return l;
}

Line Line::through(const Point& p, const Point& q) {
    const Point d = q - p;
    return from_point_normal(p, rot90(d));
}

Line Line::from_point_normal(const Point& p, const Point& n) {
    return make(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

double power_of_point(const Point& p, const Circle& c) {
    return norm2(p - c.center) - c.radius * c.radius;
}

Line radical_axis(const Circle& c1, const Circle& c2, const Tol& tol) {
    const double scale = std::max({c1.radius, c2.radius, dist(c1.center, c2.center)});
    if (tol.zero(dist(c1.center, c2.center), scale))
        fail("ConcentricCircles", "radical axis undefined for concentric circles");
    const Point o1 = c1.center, o2 = c2.center;
    const double a = 2.0 * (o2.x - o1.x);
    const double b = 2.0 * (o2.y - o1.y);
    const double c = (norm2(o1) - c1.radius * c1.radius) - (norm2(o2) - c2.radius * c2.radius);
    return Line::make(a, b, c);
}

GObject invert(const Point& z, double k2, const GObject& obj, const Tol& tol) {
    if (k2 <= 0.0) fail("InvalidPower", "inversion power must be positive");

    if (const Point* p = std::get_if<Point>(&obj)) {
        const Point v = *p - z;
        const double d2 = norm2(v);
        if (tol.zero(std::sqrt(d2), std::sqrt(k2)))
            fail("DegenerateImage", "inversion center has no image");
        return GObject{z + v * (k2 / d2)};
    }
    if (const Line* l = std::get_if<Line>(&obj)) {
        const double h = l->signed_dist(z);
        if (tol.zero(h)) return GObject{*l}; // line through the center is fixed
        // Image is the circle through z with the inverse of the foot as antipode.
        const Point center = z - l->normal() * (k2 / (2.0 * h));
        return GObject{Circle{center, k2 / (2.0 * std::abs(h))}};
    }
    const Circle& c = std::get<Circle>(obj);
    const double pow_z = power_of_point(z, c);
    if (tol.zero(pow_z, c.radius * c.radius + norm2(z - c.center))) {
        // Circle through the center maps to the line perpendicular to the
        // center ray at the image of the antipode of z.
        const Point u = (c.center - z) / c.radius;
        const Point q = z + u * (k2 / (2.0 * c.radius));
        return GObject{Line::from_point_normal(q, u)};
    }
    const double s = k2 / pow_z;
    return GObject{Circle{z + (c.center - z) * s, c.radius * std::abs(s)}};
}

Line polar(const Point& p, const Circle& c, const Tol& tol) {
    const Point v = p - c.center;
    const double d = norm(v);
    if (tol.zero(d, c.radius)) fail("CenterPole", "polar of the center is the line at infinity");
    const Point q = c.center + v * (c.radius * c.radius / (d * d));
    return Line::from_point_normal(q, v);
}

Circle circumcircle(const Point& a0, const Point& b0, const Point& c0, const Tol& tol) {
    const double scale = std::max({dist(a0, b0), dist(b0, c0), dist(a0, c0)});
    const double area2 = cross(b0 - a0, c0 - a0);
    if (tol.zero(area2, scale * scale)) fail("CollinearPoints", "circumcircle of collinear points");
    // Work relative to the centroid; the result is translation-invariant and
    // this keeps the determinant well conditioned for clustered inputs.
    const Point g = (a0 + b0 + c0) / 3.0;
    const Point a = a0 - g, b = b0 - g, c = c0 - g;
    const double an = norm2(a), bn = norm2(b), cn = norm2(c);
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double ux = (an * (b.y - c.y) + bn * (c.y - a.y) + cn * (a.y - b.y)) / d;
    const double uy = (an * (c.x - b.x) + bn * (a.x - c.x) + cn * (b.x - a.x)) / d;
    const Point center = Point{ux, uy} + g;
    return Circle{center, dist(center, a0)};
}

namespace {

std::vector<Point> intersect_cc(const Circle& c1, const Circle& c2, const Tol& tol) {
    const double scale = std::max({c1.radius, c2.radius, dist(c1.center, c2.center)});
    const double d = dist(c1.center, c2.center);
    if (tol.zero(d, scale) && tol.near(c1.radius, c2.radius, scale))
        fail("IdenticalObjects", "intersect of coincident circles");
    const Point u = (c2.center - c1.center) / d;
    const double along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - along * along;
    const double teps = 2.0 * c1.radius * tol.eps(scale);
    std::vector<Point> out;
    if (h2 < -teps) return out;
    const Point base = c1.center + u * along;
    if (h2 <= teps) {
        out.push_back(base);
        return out;
    }
    const Point off = rot90(u) * std::sqrt(h2);
    out.push_back(base + off);
    out.push_back(base - off);
    sort_lex(out);
    return out;
}

std::vector<Point> intersect_cl(const Circle& c, const Line& l, const Tol& tol) {
    const double h = l.signed_dist(c.center);
    const double t2 = c.radius * c.radius - h * h;
    const double teps = 2.0 * c.radius * tol.eps(c.radius);
    std::vector<Point> out;
    if (t2 < -teps) return out;
    const Point base = c.center - l.normal() * h;
    if (t2 <= teps) {
        out.push_back(base);
        return out;
    }
    const Point off = l.direction() * std::sqrt(t2);
    out.push_back(base + off);
    out.push_back(base - off);
    sort_lex(out);
    return out;
}

std::vector<Point> intersect_ll(const Line& l1, const Line& l2, const Tol& tol) {
    const double det = l1.a * l2.b - l2.a * l1.b;
    if (tol.zero(det)) {
        if (line_residual(l1, l2) <= tol.eps())
            fail("IdenticalObjects", "intersect of coincident lines");
        return {};
    }
    const double x = (l1.b * l2.c - l2.b * l1.c) / det;
    const double y = (l2.a * l1.c - l1.a * l2.c) / det;
    return {Point{x, y}};
}

std::vector<Point> intersect_point(const Point& p, const GObject& other, const Tol& tol) {
    if (const Point* q = std::get_if<Point>(&other)) {
        const double scale = std::max(norm(p), norm(*q));
        if (tol.zero(dist(p, *q), scale)) fail("IdenticalObjects", "intersect of coincident points");
        return {};
    }
    if (const Line* l = std::get_if<Line>(&other)) {
        if (tol.zero(l->signed_dist(p), norm(p))) return {p};
        return {};
    }
    const Circle& c = std::get<Circle>(other);
    if (on_circle(p, c, tol)) return {p};
    return {};
}

} // namespace

std::vector<Point> intersect(const GObject& a, const GObject& b, const Tol& tol) {
    if (std::holds_alternative<Point>(a)) return intersect_point(std::get<Point>(a), b, tol);
    if (std::holds_alternative<Point>(b)) return intersect_point(std::get<Point>(b), a, tol);
    if (std::holds_alternative<Circle>(a)) {
        const Circle& c = std::get<Circle>(a);
        if (std::holds_alternative<Circle>(b)) return intersect_cc(c, std::get<Circle>(b), tol);
        return intersect_cl(c, std::get<Line>(b), tol);
    }
    const Line& l = std::get<Line>(a);
    if (std::holds_alternative<Circle>(b)) return intersect_cl(std::get<Circle>(b), l, tol);
    return intersect_ll(l, std::get<Line>(b), tol);
}

Tangency tangency(const GObject& a, const GObject& b, const Tol& tol) {
    const Circle* c1 = std::get_if<Circle>(&a);
    const Circle* c2 = std::get_if<Circle>(&b);
    if (c1 && c2) {
        const double d = dist(c1->center, c2->center);
        const double scale = std::max({c1->radius, c2->radius, d});
        if (tol.zero(d, scale) && tol.near(c1->radius, c2->radius, scale)) return Tangency::None;
        if (tol.near(d, c1->radius + c2->radius, scale)) return Tangency::External;
        if (tol.near(d, std::abs(c1->radius - c2->radius), scale)) return Tangency::Internal;
        return Tangency::None;
    }
    const Circle* c = c1 ? c1 : c2;
    const Line* l = c1 ? std::get_if<Line>(&b) : std::get_if<Line>(&a);
    if (c && l) {
        if (tol.near(std::abs(l->signed_dist(c->center)), c->radius, c->radius))
            return Tangency::LineTangent;
        return Tangency::None;
    }
    return Tangency::None;
}

Point angle_bisector_foot(const Point& s, const Point& a, const Point& b, const Tol& tol) {
    const double ab = dist(a, b);
    if (tol.zero(ab, std::max(norm(a), norm(b)))) fail("DegenerateTriangle", "A and B coincide");
    const double da = dist(s, a), db = dist(s, b);
    // Reject S on the segment AB: the angle at S is flat there.
    const double t = dot(s - a, b - a) / (ab * ab);
    if (t >= 0.0 && t <= 1.0) {
        const Point proj = a + (b - a) * t;
        if (tol.zero(dist(s, proj), ab)) fail("DegenerateTriangle", "S lies on segment AB");
    }
    return a + (b - a) * (da / (da + db));
}

Point arc_midpoint(const Circle& c, const Point& a, const Point& b, const Point& avoid,
                   const Tol& tol) {
    const double r2 = c.radius * c.radius;
    for (const Point* p : {&a, &b, &avoid})
        if (!tol.zero(power_of_point(*p, c), 4.0 * r2))
            fail("PointsNotOnCircle", "arc endpoints must lie on the circle");
    if (tol.zero(dist(a, b), c.radius)) fail("PointsNotOnCircle", "arc endpoints coincide");
    const Line chord = Line::through(a, b);
    const Point m1 = c.center + chord.normal() * c.radius;
    const Point m2 = c.center - chord.normal() * c.radius;
    const double side = chord.signed_dist(avoid);
    if (side > 0.0) return m2;
    if (side < 0.0) return m1;
    return m1; // avoid coincides with A or B; either arc midpoint is valid
}

} // namespace sharygin
