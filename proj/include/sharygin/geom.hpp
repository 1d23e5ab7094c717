#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "sharygin/tol.hpp"

namespace sharygin {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    Point operator/(double s) const { return {x / s, y / s}; }
};

inline Point operator*(double s, const Point& p) { return p * s; }
inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
inline Point rot90(const Point& a) { return {-a.y, a.x}; } // +90 degrees, counterclockwise
inline Point normalized(const Point& a) { return a / norm(a); }

/// Lexicographic order, used wherever a deterministic choice between two
/// constructed points is needed.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Line ax + by + c = 0, stored with a^2 + b^2 = 1 and a canonical sign
/// (first nonzero of (a,b) positive) so equal lines have equal coefficients.
struct Line {
    double a = 1.0, b = 0.0, c = 0.0;

    static Line make(double a, double b, double c);
    static Line through(const Point& p, const Point& q);
    static Line from_point_normal(const Point& p, const Point& n);

    double signed_dist(const Point& p) const { return a * p.x + b * p.y + c; }
    Point normal() const { return {a, b}; }
    Point direction() const { return {-b, a}; }
    Point foot(const Point& p) const { return p - normal() * signed_dist(p); }
    /// An arbitrary fixed point of the line (the one nearest the origin).
    Point point() const { return {-a * c, -b * c}; }
};

struct Circle {
    Point center;
    double radius = 1.0;
};

/// Closure of circles under inversion: a circle, a line, or (for the
/// degenerate cases) a point.
using GObject = std::variant<Circle, Line, Point>;

enum class Tangency { None, External, Internal, LineTangent };

double power_of_point(const Point& p, const Circle& c);

/// Locus of equal power with respect to c1 and c2; perpendicular to the line
/// of centers. Throws ConcentricCircles when the centers coincide.
Line radical_axis(const Circle& c1, const Circle& c2, const Tol& tol = {});

/// Inversion with center z and power k2 (> 0). Circles and lines through the
/// center map to lines; the center itself has no image (DegenerateImage).
GObject invert(const Point& z, double k2, const GObject& obj, const Tol& tol = {});

/// Polar line of p with respect to c; perpendicular to the center-p segment
/// at the inverse point of p. Throws CenterPole when p is the center.
Line polar(const Point& p, const Circle& c, const Tol& tol = {});

Circle circumcircle(const Point& a, const Point& b, const Point& c, const Tol& tol = {});

/// All common points of two objects (0, 1 or 2), lexicographically sorted.
/// Tangency yields exactly one point. Throws IdenticalObjects.
std::vector<Point> intersect(const GObject& a, const GObject& b, const Tol& tol = {});

Tangency tangency(const GObject& a, const GObject& b, const Tol& tol = {});

/// Foot T of the bisector of angle ASB on segment AB: AT/TB = SA/SB.
Point angle_bisector_foot(const Point& s, const Point& a, const Point& b, const Tol& tol = {});

/// Midpoint of the arc AB of c that does not contain `avoid`.
Point arc_midpoint(const Circle& c, const Point& a, const Point& b, const Point& avoid,
                   const Tol& tol = {});

inline bool on_circle(const Point& p, const Circle& c, const Tol& tol = {}) {
    return tol.zero(power_of_point(p, c), c.radius * c.radius);
}

/// Max coefficient-wise deviation of two canonical lines.
inline double line_residual(const Line& l1, const Line& l2) {
    return std::max({std::abs(l1.a - l2.a), std::abs(l1.b - l2.b), std::abs(l1.c - l2.c)});
}

} // namespace sharygin
