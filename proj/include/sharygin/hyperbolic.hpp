#pragma once

#include <variant>

#include "sharygin/cycles.hpp"
#include "sharygin/geom.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

/// The absolute circle of a Poincare disk model.
struct Absolute {
    Circle omega{{0.0, 0.0}, 1.0};
};

enum class HClass { HCircle, Horocycle, Equidistant, Geodesic, HPoint, Exterior };

/// Hyperbolic type of a Euclidean object relative to the absolute:
/// circles strictly inside are hyperbolic circles, internally tangent ones
/// horocycles, orthogonal ones geodesics, crossing ones equidistants.
HClass classify(const GObject& obj, const Absolute& abs, const Tol& tol = {});

/// Poincare distance (curvature -1) between points strictly inside the disk.
double hyp_distance(const Point& p, const Point& q, const Absolute& abs, const Tol& tol = {});

/// Hyperbolic radius of a circle classified HCircle.
double hyp_radius(const Circle& c, const Absolute& abs, const Tol& tol = {});

/// Hyperbolic center of a circle classified HCircle. Coincides with the
/// limiting point of (c, absolute) that lies inside the disk.
Point poincare_center(const Circle& c, const Absolute& abs, const Tol& tol = {});

using HObject = std::variant<Cycle, Axis, Point>;

/// Hyperbolic inflation by rho, extended to every Euclidean cycle, axis and
/// point: the image lies in the coaxial pencil spanned by the input and the
/// absolute, the signed hyperbolic radius of an interior cycle grows by
/// exactly rho, and oriented tangencies are preserved. Computed by mapping
/// the disk to the half-plane, applying the Lorentz cycle map with
/// v = -tanh(rho), and mapping back.
HObject hyp_inflate(const HObject& obj, double rho, const Absolute& abs, const Tol& tol = {});

/// Signed hyperbolic radius of a cycle strictly inside the disk (sign taken
/// from the cycle's orientation).
double signed_hyp_radius(const Cycle& c, const Absolute& abs, const Tol& tol = {});

} // namespace sharygin
