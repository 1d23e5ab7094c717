#include "sharygin/props.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sharygin/conics.hpp"
#include "sharygin/error.hpp"
#include "sharygin/pencil.hpp"

namespace sharygin {

Point second_intersection(const Point& s, const Point& p, const Circle& c, const Tol& tol) {
    if (!tol.zero(power_of_point(p, c), 4.0 * c.radius * c.radius))
        fail("LineMissesCircle", "P does not lie on the circle");
    const double sp = dist(s, p);
    if (tol.zero(sp, c.radius)) fail("LineMissesCircle", "S and P coincide");
    const Point dir = (p - s) / sp;
    // P + u*dir on circle: u(u + 2 dir.(P - O)) = 0; the nonzero root is the image.
    const double u = -2.0 * dot(dir, p - c.center);
    return p + dir * u;
}

Line tls_line(const std::vector<Point>& pts) {
    Point mean{0.0, 0.0};
    for (const Point& p : pts) mean = mean + p;
    mean = mean / static_cast<double>(pts.size());
    double sxx = 0, sxy = 0, syy = 0;
    for (const Point& p : pts) {
        const Point d = p - mean;
        sxx += d.x * d.x;
        sxy += d.x * d.y;
        syy += d.y * d.y;
    }
    // Normal is the eigenvector of the smaller eigenvalue of the scatter matrix.
    const double tr = sxx + syy;
    const double det = sxx * syy - sxy * sxy;
    const double lam = 0.5 * (tr - std::sqrt(std::max(tr * tr - 4.0 * det, 0.0)));
    Point n{sxy, lam - sxx};
    if (norm(n) == 0.0) n = Point{lam - syy, sxy};
    if (norm(n) == 0.0) n = Point{1.0, 0.0};
    return Line::from_point_normal(mean, n);
}

Property1Result property1_check(const Point& s, const Circle& w1, const Circle& w2,
                                const Point& a, const Point& b, const Point& c, const Point& d,
                                const Tol& tol) {
    Property1Result res;
    res.images[0] = second_intersection(s, a, w1, tol);
    res.images[1] = second_intersection(s, b, w1, tol);
    res.images[2] = second_intersection(s, c, w2, tol);
    res.images[3] = second_intersection(s, d, w2, tol);
    const std::vector<Point> pts(res.images.begin(), res.images.end());
    const Line fit = tls_line(pts);
    double worst = 0.0;
    for (const Point& p : pts) worst = std::max(worst, std::abs(fit.signed_dist(p)));
    res.collinearity_residual = worst;
    return res;
}

double property2_check(const Point& s, const Circle& w2, const Point& a, const Point& b,
                       const Tol& tol) {
    const Line ab = Line::through(a, b);
    if (tangency(GObject{w2}, GObject{ab}, Tol{1e-6, 1e-6}) != Tangency::LineTangent)
        fail("LineMissesCircle", "AB is not tangent to the circle");
    (void)tol;
    const Point x = ab.foot(w2.center); // tangency point
    return std::abs(dist(s, a) / dist(x, a) - dist(s, b) / dist(x, b));
}

namespace {
double ray_angle(const Point& from, const Point& to1, const Point& to2) {
    const Point u = to1 - from, v = to2 - from;
    const double ang = std::atan2(std::abs(cross(u, v)), dot(u, v));
    return ang; // unsigned, in [0, pi]
}
} // namespace

double property4_check(const Point& s, const Point& a, const Point& b, const Point& c,
                       const Point& d) {
    return std::abs(ray_angle(s, a, c) - ray_angle(s, b, d));
}

double LineInvolution::operator()(double t) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (std::isinf(t)) {
        if (gamma == 0.0) return inf;
        return alpha / gamma;
    }
    const double den = gamma * t - alpha;
    if (den == 0.0) return inf;
    return (alpha * t + beta) / den;
}

LineInvolution involution_from_pairs(std::pair<double, double> p1, std::pair<double, double> p2,
                                     const Tol& tol) {
    // Points of the line as homogeneous pairs (u : w); t = u/w, infinity = (1 : 0).
    auto homog = [](double t) {
        if (std::isinf(t)) return std::pair<double, double>{t > 0 ? 1.0 : -1.0, 0.0};
        return std::pair<double, double>{t, 1.0};
    };
    // Pair (p, q) swapped by [[alpha, beta], [gamma, -alpha]] gives the row
    // -(qu pw + qw pu) alpha - (qw pw) beta + (qu pu) gamma = 0.
    auto row = [&](std::pair<double, double> pr) {
        const auto [pu, pw] = homog(pr.first);
        const auto [qu, qw] = homog(pr.second);
        return std::array<double, 3>{-(qu * pw + qw * pu), -(qw * pw), qu * pu};
    };
    const auto r1 = row(p1);
    const auto r2 = row(p2);
    // Null vector via the cross product of the two rows.
    const double alpha = r1[1] * r2[2] - r1[2] * r2[1];
    const double beta = r1[2] * r2[0] - r1[0] * r2[2];
    const double gamma = r1[0] * r2[1] - r1[1] * r2[0];
    const double mag = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
    if (tol.zero(mag)) fail("InconsistentPairs", "the two pairs do not determine an involution");
    const double det = alpha * alpha + beta * gamma;
    if (tol.zero(det, mag * mag))
        fail("InconsistentPairs", "pairs determine a degenerate (parabolic) map");
    return LineInvolution{alpha / mag, beta / mag, gamma / mag};
}

Point ProjectiveMap::apply(const Point& p) const {
    const Eigen::Vector3d v = m * Eigen::Vector3d(p.x, p.y, 1.0);
    if (v(2) == 0.0) fail("DegenerateImage", "point maps to the line at infinity");
    return {v(0) / v(2), v(1) / v(2)};
}

Eigen::Matrix3d ProjectiveMap::transport(const Eigen::Matrix3d& conic) const {
    const Eigen::Matrix3d inv = m.inverse();
    return inv.transpose() * conic * inv;
}

ProjectiveMap harmonic_homology(const Point& center, const Line& axis) {
    const Eigen::Vector3d s(center.x, center.y, 1.0);
    const Eigen::Vector3d l(axis.a, axis.b, axis.c);
    const double ls = l.dot(s);
    ProjectiveMap map;
    map.m = ls * Eigen::Matrix3d::Identity() - 2.0 * (s * l.transpose());
    return map;
}

double conic_transport_residual(const ProjectiveMap& map, const Eigen::Matrix3d& c1,
                                const Eigen::Matrix3d& c2) {
    const Eigen::Matrix3d t = map.transport(c1);
    const Eigen::Matrix3d a = t / t.norm();
    Eigen::Matrix3d b = c2 / c2.norm();
    // Projective forms: compare against the better-signed multiple.
    const double rp = (a - b).norm();
    const double rm = (a + b).norm();
    return std::min(rp, rm);
}

std::pair<ProjectiveMap, ProjectiveMap> sharygin_homologies(const Circle& w1, const Circle& w2,
                                                            const Tol& tol) {
    const LimitingPair lim = sharygin_points(w1, w2, tol);
    const Point s = lim.s;
    const Point sp = lim.s_prime;
    const double sep = dist(s, sp);
    const double scale = std::max({w1.radius, w2.radius, sep});

    Eigen::Matrix3d to_norm = Eigen::Matrix3d::Identity(); // world -> frame at S
    double polar_x = 0.0;                                  // frame abscissa of the polar
    const bool concentric = tol.zero(sep, scale);
    if (!concentric) {
        const Point u = (sp - s) / sep;
        // Rotation u -> e_x composed with translation S -> origin.
        to_norm << u.x, u.y, -(u.x * s.x + u.y * s.y), -u.y, u.x, (u.y * s.x - u.x * s.y), 0.0,
            0.0, 1.0;
        polar_x = sep;
    }

    // Phi sends the common polar {x = polar_x} to the line at infinity while
    // fixing the origin; for concentric input the polar is already there.
    Eigen::Matrix3d phi = Eigen::Matrix3d::Identity();
    if (!concentric) {
        phi << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0 / polar_x, 0.0, 1.0;
    }

    const Eigen::Matrix3d pre = phi * to_norm;
    const ProjectiveMap pre_map{pre};
    const Eigen::Matrix3d g1 = pre_map.transport(conic_from_circle(w1).m);
    const Eigen::Matrix3d g2 = pre_map.transport(conic_from_circle(w2).m);

    // Both images are centered at the origin; the scaling ratio is read off
    // the quadratic parts and the affine constants.
    const double quad_ratio =
        (g1.topLeftCorner<2, 2>().cwiseProduct(g2.topLeftCorner<2, 2>())).sum() /
        g2.topLeftCorner<2, 2>().squaredNorm();
    const double lambda2 = (g2(2, 2) / g1(2, 2)) * quad_ratio;
    if (!(lambda2 > 0.0))
        fail("NoRealHomology",
             "the transported conics have different signatures; no central scaling "
             "maps one to the other");
    const double lambda = std::sqrt(lambda2);

    const Eigen::Matrix3d pre_inv = pre.inverse();
    auto build = [&](double ratio) {
        Eigen::Matrix3d h = Eigen::Matrix3d::Identity();
        h(0, 0) = ratio;
        h(1, 1) = ratio;
        return ProjectiveMap{pre_inv * h * pre};
    };
    return {build(lambda), build(-lambda)};
}

} // namespace sharygin
