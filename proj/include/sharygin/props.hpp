#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "sharygin/geom.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

/// Second intersection of line SP with c, where P lies on c. Returns P itself
/// when SP is tangent at P.
Point second_intersection(const Point& s, const Point& p, const Circle& c, const Tol& tol = {});

struct Property1Result {
    std::array<Point, 4> images; // A', B', C', D'
    double collinearity_residual = 0.0;
};

/// A, B on w1 and C, D on w2, all collinear; images via second intersections
/// from S. Residual is the max distance of the four images to their
/// total-least-squares line.
Property1Result property1_check(const Point& s, const Circle& w1, const Circle& w2,
                                const Point& a, const Point& b, const Point& c, const Point& d,
                                const Tol& tol = {});

/// |SA/XA - SB/XB| for AB tangent to w2 at X; zero iff X lies on the bisector
/// of angle ASB.
double property2_check(const Point& s, const Circle& w2, const Point& a, const Point& b,
                       const Tol& tol = {});

inline double property3_ratio(const Point& s, const Point& a, const Point& b) {
    return (dist(s, a) + dist(s, b)) / dist(a, b);
}

/// |angle ASC - angle BSD| as unsigned angles in [0, pi].
double property4_check(const Point& s, const Point& a, const Point& b, const Point& c,
                       const Point& d);

/// Fractional-linear involution t -> (alpha t + beta)/(gamma t - alpha) on a
/// parameterized line, with the point at infinity handled projectively.
struct LineInvolution {
    double alpha = 0.0, beta = 1.0, gamma = 1.0;

    /// Evaluate; infinity in, infinity out are represented by +inf.
    double operator()(double t) const;
};

/// Unique involution swapping the two given pairs (coordinates may be +-inf).
LineInvolution involution_from_pairs(std::pair<double, double> p1, std::pair<double, double> p2,
                                     const Tol& tol = {});

/// Projective map on homogeneous (x : y : w), with conic transport
/// C -> M^-T C M^-1.
struct ProjectiveMap {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();

    Point apply(const Point& p) const;
    Eigen::Matrix3d transport(const Eigen::Matrix3d& conic) const;
};

/// Harmonic homology with the given center and axis (cross-ratio -1); fixes
/// the center, fixes the axis pointwise, and is an involution.
ProjectiveMap harmonic_homology(const Point& center, const Line& axis);

/// The two homologies with center S (a limiting point of w1, w2) and axis the
/// common polar of S, built by conjugating the two central scalings through a
/// projective map that sends the polar to the line at infinity.
std::pair<ProjectiveMap, ProjectiveMap> sharygin_homologies(const Circle& w1, const Circle& w2,
                                                            const Tol& tol = {});

/// Scaled Frobenius deviation of transport(c1) from the best multiple of c2.
double conic_transport_residual(const ProjectiveMap& map, const Eigen::Matrix3d& c1,
                                const Eigen::Matrix3d& c2);

/// Total-least-squares line through a set of points.
Line tls_line(const std::vector<Point>& pts);

} // namespace sharygin
