#include "sharygin/hyperbolic.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "sharygin/error.hpp"

namespace sharygin {

namespace {

using Cx = std::complex<double>;

Cx cx(const Point& p) { return {p.x, p.y}; }
Point pt(const Cx& z) { return {z.real(), z.imag()}; }

// Disk |z| < 1 to the right half-plane Re w > 0 and back.
Cx disk_to_half(const Cx& z) { return (1.0 + z) / (1.0 - z); }
Cx half_to_disk(const Cx& w) { return (w - 1.0) / (w + 1.0); }

struct UnitFrame {
    Point origin;
    double scale = 1.0;

    Cx to_unit(const Point& p) const { return cx((p - origin) / scale); }
    Point from_unit(const Cx& z) const { return origin + pt(z) * scale; }
};

UnitFrame frame_of(const Absolute& abs) { return {abs.omega.center, abs.omega.radius}; }

} // namespace

HClass classify(const GObject& obj, const Absolute& abs, const Tol& tol) {
    const Circle& om = abs.omega;
    const double R = om.radius;
    if (const Point* p = std::get_if<Point>(&obj)) {
        return dist(*p, om.center) < R - tol.eps(R) ? HClass::HPoint : HClass::Exterior;
    }
    if (const Line* l = std::get_if<Line>(&obj)) {
        const double h = std::abs(l->signed_dist(om.center));
        if (tol.near(h, R, R)) return HClass::Horocycle; // tangent to the absolute
        if (h > R) return HClass::Exterior;
        if (tol.zero(h, R)) return HClass::Geodesic; // diameter
        return HClass::Equidistant;
    }
    const Circle& c = std::get<Circle>(obj);
    const double d = dist(c.center, om.center);
    const double scale = std::max({R, c.radius, d});
    if (tol.near(d, std::abs(R - c.radius), scale)) return HClass::Horocycle;
    if (d + c.radius < R - tol.eps(scale)) return HClass::HCircle;
    const bool crossing = d < R + c.radius - tol.eps(scale) &&
                          d > std::abs(R - c.radius) + tol.eps(scale);
    if (!crossing) return HClass::Exterior;
    if (tol.zero(d * d - (R * R + c.radius * c.radius), scale * scale)) return HClass::Geodesic;
    return HClass::Equidistant;
}

double hyp_distance(const Point& p, const Point& q, const Absolute& abs, const Tol& tol) {
    const UnitFrame f = frame_of(abs);
    const Cx z = f.to_unit(p), w = f.to_unit(q);
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        fail("OutsideDisk", "points must lie strictly inside the absolute");
    (void)tol;
    const double m = std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
    return 2.0 * std::atanh(m);
}

namespace {

// Diametral positions of an interior circle along the ray through the disk
// center, in unit coordinates: t_minus <= t_plus.
void diametral(const Circle& c, const Absolute& abs, double& t_minus, double& t_plus) {
    const UnitFrame f = frame_of(abs);
    const double m = std::abs(f.to_unit(c.center));
    const double rho = c.radius / f.scale;
    t_minus = m - rho;
    t_plus = m + rho;
}

} // namespace

double hyp_radius(const Circle& c, const Absolute& abs, const Tol& tol) {
    if (classify(GObject{c}, abs, tol) != HClass::HCircle)
        fail("NotAHyperbolicCircle", "circle is not strictly inside the absolute");
    double t0, t1;
    diametral(c, abs, t0, t1);
    return std::atanh(t1) - std::atanh(t0);
}

Point poincare_center(const Circle& c, const Absolute& abs, const Tol& tol) {
    if (classify(GObject{c}, abs, tol) != HClass::HCircle)
        fail("NotAHyperbolicCircle", "circle is not strictly inside the absolute");
    const UnitFrame f = frame_of(abs);
    const Cx zc = f.to_unit(c.center);
    double t0, t1;
    diametral(c, abs, t0, t1);
    const double tc = std::tanh(0.5 * (std::atanh(t0) + std::atanh(t1)));
    if (std::abs(zc) <= tol.abs_eps) return c.center; // concentric with the absolute
    const Cx dir = zc / std::abs(zc);
    return f.from_unit(dir * tc);
}

double signed_hyp_radius(const Cycle& c, const Absolute& abs, const Tol& tol) {
    const double r = hyp_radius(c.circle(), abs, tol);
    return c.r >= 0.0 ? r : -r;
}

namespace {

// An oriented finite cycle in some chart: signed radius, clockwise positive.
struct ChartCycle {
    Cx center;
    double r = 0.0;
};

constexpr double kTau = 6.283185307179586476925286766559;

// Traversal-ordered sample angles starting at `base`: clockwise for r > 0.
std::array<double, 3> marker_angles(double base, double r) {
    const double step = (r >= 0.0 ? -1.0 : 1.0) * kTau / 5.0;
    return {base, base + step, base + 2.0 * step};
}

std::array<Cx, 3> markers_of(const ChartCycle& c, double base) {
    std::array<Cx, 3> out;
    const auto angles = marker_angles(base, c.r);
    for (int i = 0; i < 3; ++i)
        out[i] = c.center + std::polar(std::abs(c.r), angles[i]);
    return out;
}

// Rebuild an oriented cycle (or detect a line) from traversal-ordered points.
bool from_markers(const std::array<Cx, 3>& m, ChartCycle& cyc, const Tol& tol) {
    const Point p0 = pt(m[0]), p1 = pt(m[1]), p2 = pt(m[2]);
    const double spread = std::max({dist(p0, p1), dist(p1, p2), dist(p0, p2)});
    const double turn = cross(p1 - p0, p2 - p1);
    if (std::abs(turn) <= 1e-12 * spread * spread) return false; // a line
    const Circle c = circumcircle(p0, p1, p2, tol);
    cyc.center = cx(c.center);
    cyc.r = turn < 0.0 ? c.radius : -c.radius;
    return true;
}

struct HalfPlaneCycle {
    double x = 0.0, y = 0.0, r = 0.0;
};

} // namespace

HObject hyp_inflate(const HObject& obj, double rho, const Absolute& abs, const Tol& tol) {
    if (rho == 0.0) return obj;
    const UnitFrame f = frame_of(abs);

    // Unit-disk representation of the input.
    bool is_point = false;
    bool is_axis = false;
    ChartCycle in;
    Point axis_dir;
    if (const Cycle* c = std::get_if<Cycle>(&obj)) {
        in.center = f.to_unit(c->center());
        in.r = c->r / f.scale;
        if (tol.zero(std::abs(in.center)) && tol.near(std::abs(in.r), 1.0))
            fail("DegenerateImage", "the absolute itself has no inflation image");
        is_point = tol.zero(in.r);
    } else if (const Axis* a = std::get_if<Axis>(&obj)) {
        is_axis = true;
        axis_dir = a->dir;
        in.center = cx((a->point() - f.origin) / f.scale); // a point of the line
    } else {
        in.center = f.to_unit(std::get<Point>(obj));
        in.r = 0.0;
        is_point = true;
    }

    // Rotate the chart so the object clears the map pole z = 1.
    double best_theta = 0.0, best_clear = -1.0;
    for (int k = 0; k < 16; ++k) {
        const double theta = kTau * k / 16.0;
        const Cx rot = std::polar(1.0, theta);
        double clear;
        if (is_axis) {
            const Axis rotated = Axis::through(pt(rot * in.center), pt(rot * cx(axis_dir)));
            clear = std::abs(rotated.line().signed_dist(Point{1.0, 0.0}));
        } else {
            clear = std::abs(std::abs(rot * in.center - Cx{1.0, 0.0}) - std::abs(in.r));
        }
        if (clear > best_clear) {
            best_clear = clear;
            best_theta = theta;
        }
    }
    const Cx rot = std::polar(1.0, best_theta);
    if (!(best_clear > 1e-9)) fail("DegenerateImage", "object cannot be separated from the chart pole");

    // Forward transport to the half-plane.
    HalfPlaneCycle hp;
    if (is_point) {
        const Cx w = disk_to_half(rot * in.center);
        hp = {w.real(), w.imag(), 0.0};
    } else {
        std::array<Cx, 3> src;
        if (is_axis) {
            const Cx d = rot * cx(axis_dir);
            const Cx anchor = rot * in.center;
            src = {anchor - d, anchor, anchor + d};
        } else {
            src = markers_of(ChartCycle{rot * in.center, in.r}, 0.0);
        }
        std::array<Cx, 3> img;
        for (int i = 0; i < 3; ++i) img[i] = disk_to_half(src[i]);
        ChartCycle w;
        if (!from_markers(img, w, tol))
            fail("DegenerateImage", "input maps through the chart pole");
        hp = {w.center.real(), w.center.imag(), w.r};
    }

    // Lorentz cycle map; v = -tanh(rho) adds rho to the signed hyperbolic radius.
    const Cycle boosted = lorentz(-std::tanh(rho), Cycle{hp.x, hp.y, hp.r});

    // Transport back to the disk chart.
    const Cx back_rot = std::polar(1.0, -best_theta);
    if (tol.zero(boosted.r, std::max(1.0, std::abs(boosted.x) + std::abs(boosted.y)))) {
        const Cx z = back_rot * half_to_disk(Cx{boosted.x, boosted.y});
        return Point{f.from_unit(z)};
    }
    const ChartCycle wcyc{Cx{boosted.x, boosted.y}, boosted.r};
    // Base the sample markers at the far side from the back-map pole w = -1.
    const Cx to_pole = Cx{-1.0, 0.0} - wcyc.center;
    const double base = std::abs(to_pole) > 0.0 ? std::arg(to_pole) + kTau / 2.0 : 0.0;
    std::array<Cx, 3> src = markers_of(wcyc, base);
    std::array<Cx, 3> img;
    for (int i = 0; i < 3; ++i) img[i] = back_rot * half_to_disk(src[i]);

    ChartCycle out;
    if (!from_markers(img, out, tol)) {
        // The image escapes through infinity: an axis, directed by traversal.
        const Point q0 = pt(img[0]), q2 = pt(img[2]);
        return Axis::through(f.from_unit(img[0]), normalized(q2 - q0));
    }
    if (std::abs(out.r) <= tol.abs_eps) return Point{f.from_unit(out.center)};
    const Point center = f.from_unit(out.center);
    return Cycle{center.x, center.y, out.r * f.scale};
}

} // namespace sharygin
