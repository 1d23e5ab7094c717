#include "sharygin/conics.hpp"

#include <cmath>

#include "sharygin/error.hpp"

namespace sharygin {

namespace {

Eigen::Vector3d line_vec(const Line& l) { return {l.a, l.b, l.c}; }

Eigen::Matrix<double, 6, 1> vec6(const ConicQ& q) {
    Eigen::Matrix<double, 6, 1> v;
    v << q.m(0, 0), q.m(0, 1), q.m(0, 2), q.m(1, 1), q.m(1, 2), q.m(2, 2);
    return v;
}

ConicQ from_vec6(const Eigen::Matrix<double, 6, 1>& v) {
    ConicQ q;
    q.m << v(0), v(1), v(2), v(1), v(3), v(4), v(2), v(4), v(5);
    return q;
}

} // namespace

ConicQ ConicQ::canonical() const {
    const double n = m.norm();
    if (n == 0.0) fail("InvalidConic", "zero quadratic form");
    Eigen::Matrix3d c = m / n;
    double lead = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(c(i, j)) > std::abs(lead)) lead = c(i, j);
    if (lead < 0.0) c = -c;
    return ConicQ{c};
}

Point ConicQ::gradient(const Point& p) const {
    const Eigen::Vector3d v(p.x, p.y, 1.0);
    const Eigen::Vector3d g = 2.0 * (m * v);
    return {g(0), g(1)};
}

ConicQ line_pair(const Line& l1, const Line& l2) {
    const Eigen::Vector3d a = line_vec(l1), b = line_vec(l2);
    ConicQ q;
    q.m = 0.5 * (a * b.transpose() + b * a.transpose());
    return q;
}

ConicQ double_line(const Line& l) {
    const Eigen::Vector3d a = line_vec(l);
    ConicQ q;
    q.m = a * a.transpose();
    return q;
}

ConicQ conic_from_circle(const Circle& c) {
    ConicQ q;
    q.m << 1.0, 0.0, -c.center.x, 0.0, 1.0, -c.center.y, -c.center.x, -c.center.y,
        norm2(c.center) - c.radius * c.radius;
    return q;
}

Circle circle_from_conic(const ConicQ& q, const Tol& tol) {
    const double scale = q.m.norm();
    if (!tol.zero(q.m(0, 0) - q.m(1, 1), scale) || !tol.zero(q.m(0, 1), scale))
        fail("NotACircle", "quadratic part is not a multiple of the identity");
    const double a = q.m(0, 0);
    if (tol.zero(a, scale)) fail("NotACircle", "no quadratic part");
    const Point center{-q.m(0, 2) / a, -q.m(1, 2) / a};
    const double r2 = norm2(center) - q.m(2, 2) / a;
    if (r2 <= 0.0) fail("NotACircle", "radius squared is not positive");
    return Circle{center, std::sqrt(r2)};
}

ConicQ conic_pencil_lemma(const ConicQ& c1, const ConicQ& c3, const ConicQ& f12,
                          const ConicQ& f23, const Tol& tol) {
    (void)tol;
    // Null space of the 6x4 system l*c1 + m*c3 - l'*f12 - m'*f23 = 0.
    Eigen::Matrix<double, 6, 4> sys;
    sys.col(0) = vec6(c1.canonical());
    sys.col(1) = vec6(c3.canonical());
    sys.col(2) = -vec6(f12.canonical());
    sys.col(3) = -vec6(f23.canonical());
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 4>> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-10 * sv(0);
    int nullity = 0;
    for (int i = 0; i < 4; ++i)
        if (sv(i) <= cutoff) ++nullity;
    if (nullity == 0) fail("NoIntersection", "the two spans meet only in zero");
    if (nullity > 1) fail("NonGeneric", "the two spans share a full pencil");
    const Eigen::Vector4d k = svd.matrixV().col(3);
    const Eigen::Matrix<double, 6, 1> v =
        k(0) * vec6(c1.canonical()) + k(1) * vec6(c3.canonical());
    return from_vec6(v).canonical();
}

Point conic_center(const ConicQ& q, const Tol& tol) {
    const Eigen::Matrix2d a = q.m.topLeftCorner<2, 2>();
    const double scale = a.norm() * a.norm();
    if (tol.zero(a.determinant(), scale)) fail("NonCentralConic", "quadratic part is singular");
    const Eigen::Vector2d b(q.m(0, 2), q.m(1, 2));
    const Eigen::Vector2d x = a.ldlt().solve(-b);
    return {x(0), x(1)};
}

std::pair<Line, Line> conic_axes(const ConicQ& q, const Tol& tol) {
    const Point center = conic_center(q, tol);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q.m.topLeftCorner<2, 2>());
    const Eigen::Vector2d v1 = es.eigenvectors().col(0);
    const Eigen::Vector2d v2 = es.eigenvectors().col(1);
    const Line a1 = Line::from_point_normal(center, rot90(Point{v1(0), v1(1)}));
    const Line a2 = Line::from_point_normal(center, rot90(Point{v2(0), v2(1)}));
    return {a1, a2};
}

namespace {

struct PrincipalFrame {
    Point center;
    Point u1, u2;      // unit axis directions, ascending eigenvalue order
    double l1, l2, c0; // eigenvalues and reduced constant: l1 X^2 + l2 Y^2 + c0 = 0

    Point to_world(double X, double Y) const { return center + u1 * X + u2 * Y; }
    Point to_frame(const Point& p) const {
        const Point d = p - center;
        return {dot(d, u1), dot(d, u2)};
    }
};

PrincipalFrame principal_frame(const ConicQ& q, const Tol& tol) {
    PrincipalFrame f;
    f.center = conic_center(q, tol);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q.m.topLeftCorner<2, 2>());
    f.u1 = {es.eigenvectors()(0, 0), es.eigenvectors()(1, 0)};
    f.u2 = {es.eigenvectors()(0, 1), es.eigenvectors()(1, 1)};
    f.l1 = es.eigenvalues()(0);
    f.l2 = es.eigenvalues()(1);
    f.c0 = q.eval(f.center);
    return f;
}

// Double-contact points of a circle centered at (p, 0) in frame coordinates
// with the axis-1 direction as abscissa. The contact abscissa solves the
// normal-foot condition; returns false when the contact pair is complex.
bool frame_contacts(double A, double B, double p, double& xc, double& yc2) {
    // Conic X^2/A + Y^2/B = 1 with A = -c0/l1, B = -c0/l2 along the axis pair.
    const double denom = A - B;
    if (denom == 0.0) return false; // handled by the circle special case
    xc = p * A / denom;
    yc2 = B * (1.0 - xc * xc / A);
    return yc2 > 0.0;
}

} // namespace

std::pair<Point, Point> bitangent_contacts(const ConicQ& gamma, double t, int which_axis,
                                           const Tol& tol) {
    if (which_axis != 1 && which_axis != 2) fail("InvalidAxis", "axis index must be 1 or 2");
    const PrincipalFrame f = principal_frame(gamma, tol);
    if (tol.zero(f.l1, std::abs(f.l2)) || tol.zero(f.l2, std::abs(f.l1)) ||
        tol.zero(f.c0, std::abs(f.l1) + std::abs(f.l2)))
        fail("NonCentralConic", "degenerate quadratic part");
    const double A = -f.c0 / f.l1;
    const double B = -f.c0 / f.l2;
    const double scale = std::sqrt(std::abs(A) + std::abs(B));

    if (tol.near(A, B, std::abs(A))) {
        // Circle conic: only the concentric double-contact circle exists.
        if (!tol.zero(t, scale)) fail("NoRealBitangent", "circle conic admits only t = 0");
        const double r = std::sqrt(A);
        return {f.to_world(r, 0.0), f.to_world(-r, 0.0)};
    }

    double xc, yc2;
    bool ok;
    if (which_axis == 1) {
        ok = frame_contacts(A, B, t, xc, yc2);
        if (!ok) fail("NoRealBitangent", "contact points are complex on this axis");
        const double yc = std::sqrt(yc2);
        return {f.to_world(xc, yc), f.to_world(xc, -yc)};
    }
    ok = frame_contacts(B, A, t, xc, yc2);
    if (!ok) fail("NoRealBitangent", "contact points are complex on this axis");
    const double yc = std::sqrt(yc2);
    return {f.to_world(yc, xc), f.to_world(-yc, xc)};
}

Circle bitangent_circle_on_axis(const ConicQ& gamma, double t, int which_axis, const Tol& tol) {
    const auto [p1, p2] = bitangent_contacts(gamma, t, which_axis, tol);
    const PrincipalFrame f = principal_frame(gamma, tol);
    const Point center =
        which_axis == 1 ? f.to_world(t, 0.0) : f.to_world(0.0, t);
    const double r = dist(center, p1);
    if (!(r > 0.0) || !std::isfinite(r)) fail("NoRealBitangent", "contact radius is degenerate");
    return Circle{center, r};
}

Point TangentCenterLocus::at(double u) const {
    const Point mid = (focus1 + focus2) * 0.5;
    const double c = dist(focus1, focus2) * 0.5;
    const double a = length_sum * 0.5;
    const double b = std::sqrt(std::max(a * a - c * c, 0.0));
    Point ux{1.0, 0.0};
    if (c > 0.0) ux = normalized(focus2 - focus1);
    const Point uy = rot90(ux);
    return mid + ux * (a * std::cos(u)) + uy * (b * std::sin(u));
}

double TangentCenterLocus::tangent_radius(const Point& p, const Circle& w) const {
    return std::abs(dist(p, w.center) - w.radius);
}

TangentCenterLocus tangent_center_locus(const Circle& w, const Circle& w1, const Tol& tol) {
    const double d = dist(w.center, w1.center);
    const double sum = w.radius + w1.radius;
    if (sum <= d + tol.eps(std::max(d, sum)))
        fail("EmptyFamily", "no one-internal-one-external tangent circles exist");
    return TangentCenterLocus{w.center, w1.center, sum};
}

double span_residual(const ConicQ& q, const ConicQ& b1, const ConicQ& b2) {
    Eigen::Matrix<double, 6, 2> basis;
    basis.col(0) = vec6(b1.canonical());
    basis.col(1) = vec6(b2.canonical());
    const Eigen::Matrix<double, 6, 1> v = vec6(q.canonical());
    const Eigen::Vector2d coef = basis.colPivHouseholderQr().solve(v);
    return (basis * coef - v).norm();
}

} // namespace sharygin
