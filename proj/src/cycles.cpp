#include "sharygin/cycles.hpp"

#include <cmath>

#include "sharygin/error.hpp"

namespace sharygin {

Axis Axis::make(const Point& direction, double offset) {
    const double h = norm(direction);
    if (h == 0.0 || !std::isfinite(h)) fail("InvalidLine", "axis direction is zero");
    return Axis{direction / h, offset};
}

Axis Axis::through(const Point& p, const Point& direction) {
    Axis a = make(direction, 0.0);
    a.offset = dot(p, a.left_normal());
    return a;
}

Line Axis::line() const {
    const Point n = left_normal();
    return Line::make(n.x, n.y, -offset);
}

bool tangent_cycles(const Cycle& a, const Cycle& b, const Tol& tol) {
    const double scale =
        std::max({a.x * a.x + a.y * a.y + a.r * a.r, b.x * b.x + b.y * b.y + b.r * b.r, 1.0});
    if (!tol.zero(q(a, b), scale)) return false;
    const bool a_point = tol.zero(a.r, std::sqrt(scale));
    const bool b_point = tol.zero(b.r, std::sqrt(scale));
    if (a_point && b_point) return false; // two distinct points are never tangent
    if (a_point) return on_circle(a.center(), b.circle(), tol);
    if (b_point) return on_circle(b.center(), a.circle(), tol);
    return tangency(GObject{a.circle()}, GObject{b.circle()}, tol) != Tangency::None;
}

double tangent_length(const Cycle& a, const Cycle& b, const Tol& tol) {
    const double val = q(a, b);
    const double scale =
        std::max({a.x * a.x + a.y * a.y + a.r * a.r, b.x * b.x + b.y * b.y + b.r * b.r, 1.0});
    if (val < -tol.eps(scale)) fail("NoCommonTangentAxis", "cycles admit no common tangent axis");
    return std::sqrt(std::max(val, 0.0));
}

CycleOrAxis inflate(const CycleOrAxis& obj, double rho) {
    if (const Cycle* c = std::get_if<Cycle>(&obj)) return inflate(*c, rho);
    return inflate(std::get<Axis>(obj), rho);
}

Cycle lorentz(double v, const Cycle& c) {
    if (!(std::abs(v) < 1.0)) fail("SpeedOutOfRange", "|v| must be below 1");
    const double g = 1.0 / std::sqrt(1.0 - v * v);
    return {(c.x - v * c.r) * g, c.y, (c.r - v * c.x) * g};
}

} // namespace sharygin
