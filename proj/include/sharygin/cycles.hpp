#pragma once

#include <variant>

#include "sharygin/geom.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

/// Oriented circle with signed radius: r > 0 clockwise, r < 0 counterclockwise,
/// r = 0 a point.
struct Cycle {
    double x = 0.0, y = 0.0, r = 0.0;

    Point center() const { return {x, y}; }
    Circle circle() const { return Circle{{x, y}, std::abs(r)}; }
};

/// Oriented line: unit direction plus signed offset along the left normal
/// rot90(direction), so the locus is dot(p, rot90(dir)) = offset.
struct Axis {
    Point dir{1.0, 0.0};
    double offset = 0.0;

    static Axis make(const Point& direction, double offset);
    static Axis through(const Point& p, const Point& direction);

    Point left_normal() const { return rot90(dir); }
    Line line() const;
    Point point() const { return left_normal() * offset; }
};

/// Point of the pseudo-Euclidean space of signature (2,1).
struct MPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline MPoint sigma(const Cycle& c) { return {c.x, c.y, c.r}; }
inline Cycle sigma_inv(const MPoint& m) { return {m.x, m.y, m.z}; }

/// Squared interval (dx)^2 + (dy)^2 - (dz)^2; zero exactly for oriented
/// tangency, the squared common-tangent length when positive.
inline double q(const MPoint& u, const MPoint& v) {
    const double dx = u.x - v.x, dy = u.y - v.y, dz = u.z - v.z;
    return dx * dx + dy * dy - dz * dz;
}
inline double q(const Cycle& a, const Cycle& b) { return q(sigma(a), sigma(b)); }

/// True iff q vanishes and the underlying circles are geometrically tangent
/// (incident, for point cycles). Demanding both guards the float edge cases.
bool tangent_cycles(const Cycle& a, const Cycle& b, const Tol& tol = {});

/// sqrt(max(q,0)); requires a common tangent axis (q >= 0 within Tol).
double tangent_length(const Cycle& a, const Cycle& b, const Tol& tol = {});

inline Cycle inflate(const Cycle& c, double rho) { return {c.x, c.y, c.r + rho}; }
inline Axis inflate(const Axis& a, double rho) { return {a.dir, a.offset + rho}; }

using CycleOrAxis = std::variant<Cycle, Axis>;
CycleOrAxis inflate(const CycleOrAxis& obj, double rho);

/// Cycle transformation induced by the Lorentz boost of speed v along x.
Cycle lorentz(double v, const Cycle& c);

/// Relativistic velocity addition (v + w)/(1 + vw).
inline double boost_compose(double v, double w) { return (v + w) / (1.0 + v * w); }

} // namespace sharygin
