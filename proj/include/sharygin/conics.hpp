#pragma once

#include <Eigen/Dense>
#include <utility>

#include "sharygin/geom.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

/// Conic as a symmetric 3x3 quadratic form on homogeneous coordinates
/// (x : y : 1), projective (scalar multiples identified).
struct ConicQ {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();

    double eval(const Point& p) const {
        const Eigen::Vector3d v(p.x, p.y, 1.0);
        return v.dot(m * v);
    }

    /// Frobenius norm 1, largest-magnitude entry positive.
    ConicQ canonical() const;

    /// Gradient of the affine quadric at p (normal direction of the curve).
    Point gradient(const Point& p) const;
};

struct ConicPencil {
    ConicQ q1, q2;
};

/// Degenerate conic that is the product of two lines.
ConicQ line_pair(const Line& l1, const Line& l2);

/// Rank-one conic, the square of a line.
ConicQ double_line(const Line& l);

ConicQ conic_from_circle(const Circle& c);

/// Inverse of conic_from_circle; requires equal diagonal xx/yy entries, zero
/// xy entry and positive radius squared.
Circle circle_from_conic(const ConicQ& q, const Tol& tol = {});

/// Given C1, C3 and members F12 of pencil(C1, C2), F23 of pencil(C2, C3),
/// returns the unique conic lying in both span{C1, C3} and span{F12, F23}.
ConicQ conic_pencil_lemma(const ConicQ& c1, const ConicQ& c3, const ConicQ& f12,
                          const ConicQ& f23, const Tol& tol = {});

Point conic_center(const ConicQ& q, const Tol& tol = {});

/// Center-anchored symmetry axes along the eigenvectors of the quadratic
/// part, ordered by ascending eigenvalue.
std::pair<Line, Line> conic_axes(const ConicQ& q, const Tol& tol = {});

/// Circle centered at parameter t along the chosen symmetry axis (1 or 2)
/// that meets the conic with contact multiplicity two at two symmetric
/// points. Throws NoRealBitangent when the double-contact circle is complex.
Circle bitangent_circle_on_axis(const ConicQ& gamma, double t, int which_axis,
                                const Tol& tol = {});

/// Contact points of bitangent_circle_on_axis, exposed for verification.
std::pair<Point, Point> bitangent_contacts(const ConicQ& gamma, double t, int which_axis,
                                           const Tol& tol = {});

/// Locus of centers of circles tangent to w and w1 with one internal and one
/// external tangency: the ellipse with foci at the centers and constant sum
/// r_w + r_w1 of focal distances.
struct TangentCenterLocus {
    Point focus1, focus2;
    double length_sum = 0.0;

    /// Point of the ellipse at eccentric-angle parameter u.
    Point at(double u) const;
    /// Radius of the tangent circle centered at a locus point, given w.
    double tangent_radius(const Point& p, const Circle& w) const;
};

TangentCenterLocus tangent_center_locus(const Circle& w, const Circle& w1, const Tol& tol = {});

/// Span-membership residual of q against span{b1, b2} in canonical norm.
double span_residual(const ConicQ& q, const ConicQ& b1, const ConicQ& b2);

} // namespace sharygin
