#pragma once

#include <limits>
#include <vector>

#include "sharygin/geom.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

/// Circle equation a(x^2+y^2) + bx + cy + d = 0, projective (scalar multiples
/// identified). Covers real circles, point circles, imaginary members and
/// lines (a = 0).
struct CircleEq {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static CircleEq of(const Circle& c);
    static CircleEq of(const Line& l);
    static CircleEq point_circle(const Point& p);

    double eval(const Point& p) const { return a * (p.x * p.x + p.y * p.y) + b * p.x + c * p.y + d; }

    bool is_line(const Tol& tol = {}) const;
    /// b^2 + c^2 - 4ad: positive for a real circle, zero for a point,
    /// negative for an imaginary member.
    double disc() const { return b * b + c * c - 4.0 * a * d; }
    Point center() const { return {-b / (2.0 * a), -c / (2.0 * a)}; }
    double radius2() const { return disc() / (4.0 * a * a); }
    Circle to_circle(const Tol& tol = {}) const;
    Line to_line(const Tol& tol = {}) const;

    /// Largest-magnitude coefficient scaled to 1.
    CircleEq canonical() const;
};

/// Coaxial pencil spanned by two independent circle equations.
struct Pencil {
    CircleEq e1, e2;

    static Pencil make(const CircleEq& e1, const CircleEq& e2, const Tol& tol = {});
    static Pencil make(const Circle& c1, const Circle& c2, const Tol& tol = {});
};

/// The two radius-zero members of a non-intersecting pencil, ordered
/// lexicographically. For concentric circles both equal the common center.
struct LimitingPair {
    Point s, s_prime;
};

/// (1-t) e1 + t e2; t = +infinity returns e2.
CircleEq pencil_member(const Pencil& p, double t);

LimitingPair sharygin_points(const Circle& c1, const Circle& c2, const Tol& tol = {});

/// Unique member whose equation vanishes at p. Throws OnRadicalAxis when no
/// unique member exists.
CircleEq member_through_point(const Pencil& p, const Point& pt, const Tol& tol = {});

/// Real-circle members tangent to l, found from the degree-<=2 tangency
/// polynomial in the pencil parameter. Point members are excluded.
std::vector<CircleEq> member_tangent_to_line(const Pencil& p, const Line& l, const Tol& tol = {});

/// Roots in t of the tangency condition dist(center(t), l)^2 = radius^2(t).
/// Exposed for cross-checking against scan-based solvers.
std::vector<double> tangent_member_params(const Pencil& p, const Line& l, const Tol& tol = {});

/// |PS|^2 / pow_c(P). A circle through U, V in pencil(S, c) exists iff the
/// ratios at U and V agree.
double in_pencil_ratio(const Point& p, const Point& s, const Circle& c, const Tol& tol = {});

} // namespace sharygin
