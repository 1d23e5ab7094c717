#include "sharygin/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sharygin/error.hpp"
#include "sharygin/props.hpp"
#include "sharygin/rng.hpp"

namespace sharygin {

namespace {

constexpr std::uint64_t kSaltWeak = 0x7765616b6d74ull;
constexpr std::uint64_t kSaltGamma = 0x67616d6d61ull;
constexpr std::uint64_t kSaltO1 = 0x6f6c796d7031ull;
constexpr std::uint64_t kSaltO2 = 0x6f6c796d7032ull;
constexpr std::uint64_t kSaltProps = 0x70726f7073ull;

constexpr double kInf = std::numeric_limits<double>::infinity();

Point dir_of(double ang) { return {std::cos(ang), std::sin(ang)}; }

template <typename T>
const T& fetch(const Scenario& s, const std::string& id, const char* kind) {
    auto it = s.objects.find(id);
    if (it == s.objects.end()) fail("MissingObject", "scenario has no object '" + id + "'");
    const T* obj = std::get_if<T>(&it->second);
    if (!obj) fail("WrongObjectKind", "object '" + id + "' is not a " + std::string(kind));
    return *obj;
}

} // namespace

const Point& Scenario::point(const std::string& id) const { return fetch<Point>(*this, id, "point"); }
const Line& Scenario::line(const std::string& id) const { return fetch<Line>(*this, id, "line"); }
const Circle& Scenario::circle(const std::string& id) const {
    return fetch<Circle>(*this, id, "circle");
}
const Cycle& Scenario::cycle(const std::string& id) const { return fetch<Cycle>(*this, id, "cycle"); }
const ConicQ& Scenario::conic(const std::string& id) const {
    return fetch<ConicQ>(*this, id, "conic");
}

void Report::set(const std::string& check, double residual, double tolerance) {
    residuals[check] = residual;
    tolerances[check] = tolerance;
}

void Report::finalize() {
    pass = true;
    for (const auto& [check, value] : residuals) {
        if (!(value <= tolerances.at(check))) pass = false;
    }
}

double Report::max_residual() const {
    double worst = 0.0;
    for (const auto& [check, value] : residuals) worst = std::max(worst, value);
    return worst;
}

std::vector<Circle> circle_through_2pts_tangent_to_circle(const Point& a, const Point& b,
                                                          const Circle& k, const Tol& tol) {
    const double scale = std::max({k.radius, dist(a, b), dist(a, k.center)});
    if (tol.zero(power_of_point(a, k), scale * scale) ||
        tol.zero(power_of_point(b, k), scale * scale))
        fail("PointsOnCircle", "the through-points must avoid the tangent circle");

    // Invert at a: circles through a, b become lines through b', tangency to
    // k becomes tangency to k'; solutions pull back through the same inversion.
    const Point b1 = std::get<Point>(invert(a, 1.0, GObject{b}, tol));
    const GObject k1obj = invert(a, 1.0, GObject{k}, tol);
    const Circle& k1 = std::get<Circle>(k1obj);

    const Point u = b1 - k1.center;
    const double d = norm(u);
    std::vector<Circle> out;
    if (d < k1.radius - tol.eps(k1.radius)) return out; // b' inside k': no tangent lines
    std::vector<Line> lines;
    if (tol.near(d, k1.radius, k1.radius)) {
        lines.push_back(Line::from_point_normal(b1, u));
    } else {
        const double c = k1.radius / d;
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        const Point un = u / d;
        for (double sgn : {1.0, -1.0}) {
            const Point rot{c * un.x - sgn * s * un.y, sgn * s * un.x + c * un.y};
            const Point touch = k1.center + rot * k1.radius;
            lines.push_back(Line::through(b1, touch));
        }
    }
    for (const Line& l : lines) {
        const GObject img = invert(a, 1.0, GObject{l}, tol);
        const Circle* c = std::get_if<Circle>(&img);
        if (!c) continue; // the solution degenerates to the line ab itself
        out.push_back(*c);
    }
    std::sort(out.begin(), out.end(), [](const Circle& x, const Circle& y) {
        return lex_less(x.center, y.center);
    });
    return out;
}

namespace {

struct WeakInstance {
    Circle kappa, abcd, omega, omega1;
    Line line_ab, line_cd;
    Point a, b, c, d, s, s1, e;
};

// Chord of `circ` cut by `l`, lexicographically ordered; false unless the two
// points are well separated.
bool chord_points(const Circle& circ, const Line& l, double min_sep, Point& p, Point& q) {
    auto pts = intersect(GObject{circ}, GObject{l});
    if (pts.size() != 2) return false;
    if (dist(pts[0], pts[1]) < min_sep) return false;
    p = pts[0];
    q = pts[1];
    return true;
}

bool build_weak_instance(Rng& rng, bool symmetric, WeakInstance& w) {
    const Tol tol;
    w.kappa = Circle{{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)}, rng.uniform(0.5, 0.9)};
    const double phi1 = rng.uniform(0, 6.283185307179586);
    const double dphi = (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.5, 2.4);
    const double phi2 = phi1 + dphi;
    const Point x1 = w.kappa.center + dir_of(phi1) * w.kappa.radius;
    const Point x2 = w.kappa.center + dir_of(phi2) * w.kappa.radius;
    w.line_ab = Line::from_point_normal(x1, dir_of(phi1));
    w.line_cd = Line::from_point_normal(x2, dir_of(phi2));

    if (symmetric) {
        w.abcd = Circle{w.kappa.center, w.kappa.radius + rng.uniform(0.6, 1.2)};
    } else {
        w.abcd = Circle{w.kappa.center + dir_of(rng.uniform(0, 6.283185307179586)) *
                                             rng.uniform(0.3, 1.2),
                        rng.uniform(1.2, 2.0)};
    }

    if (!chord_points(w.abcd, w.line_ab, 0.3, w.a, w.b)) return false;
    if (!chord_points(w.abcd, w.line_cd, 0.3, w.c, w.d)) return false;
    const double sep = 0.12;
    for (const Point* p : {&w.a, &w.b})
        for (const Point* q : {&w.c, &w.d})
            if (dist(*p, *q) < sep) return false;

    if (!symmetric) {
        // A circle through the chord endpoints tangent to the tangent circle
        // touches it internally exactly when the touch point lies between the
        // endpoints. One internal and one external tangency therefore needs
        // one touch point inside the four-point circle and one outside.
        const double margin = 0.05 * w.abcd.radius * w.abcd.radius;
        const double pow1 = power_of_point(x1, w.abcd);
        const double pow2 = power_of_point(x2, w.abcd);
        const bool mixed = (pow1 < -margin && pow2 > margin) ||
                           (pow1 > margin && pow2 < -margin);
        if (!mixed) return false;
    }

    auto omegas = circle_through_2pts_tangent_to_circle(w.a, w.b, w.kappa, tol);
    auto omega1s = circle_through_2pts_tangent_to_circle(w.c, w.d, w.kappa, tol);
    if (omegas.empty() || omega1s.empty()) return false;

    // Pick a branch pair with a clean two-point intersection; for the mixed
    // configuration, demand the opposite tangency types of the statement.
    std::vector<std::pair<int, int>> combos;
    for (int i = 0; i < static_cast<int>(omegas.size()); ++i) {
        const Tangency ti = tangency(GObject{w.kappa}, GObject{omegas[i]}, Tol{1e-9, 1e-9});
        for (int j = 0; j < static_cast<int>(omega1s.size()); ++j) {
            const Tangency tj =
                tangency(GObject{w.kappa}, GObject{omega1s[j]}, Tol{1e-9, 1e-9});
            if (ti == Tangency::None || tj == Tangency::None) continue;
            if (!symmetric && (ti == Tangency::Internal) == (tj == Tangency::Internal))
                continue;
            auto meet = intersect(GObject{omegas[i]}, GObject{omega1s[j]});
            if (meet.size() != 2) continue;
            if (dist(meet[0], meet[1]) < 0.08 * w.abcd.radius) continue;
            bool clear = true;
            for (const Point& p : meet) {
                if (std::abs(w.line_ab.signed_dist(p)) < 0.05) clear = false;
                if (std::abs(w.line_cd.signed_dist(p)) < 0.05) clear = false;
            }
            if (clear) combos.push_back({i, j});
        }
    }
    if (combos.empty()) return false;
    const auto [oi, oj] = combos[rng.uniform_int(0, static_cast<int>(combos.size()) - 1)];
    w.omega = omegas[oi];
    w.omega1 = omega1s[oj];
    auto meet = intersect(GObject{w.omega}, GObject{w.omega1});
    w.s = meet[0];
    w.s1 = meet[1];

    auto epts = intersect(GObject{w.line_ab}, GObject{w.line_cd});
    if (epts.size() != 1) return false;
    w.e = epts[0];
    if (norm(w.e) > 40.0) return false; // keep the trace well conditioned
    return true;
}

Scenario scenario_of(const WeakInstance& w, const std::string& name, std::uint64_t seed) {
    Scenario s;
    s.name = name;
    s.seed = seed;
    s.objects["kappa"] = w.kappa;
    s.objects["abcd"] = w.abcd;
    s.objects["omega"] = w.omega;
    s.objects["omega1"] = w.omega1;
    s.objects["lineAB"] = w.line_ab;
    s.objects["lineCD"] = w.line_cd;
    s.objects["A"] = w.a;
    s.objects["B"] = w.b;
    s.objects["C"] = w.c;
    s.objects["D"] = w.d;
    s.objects["S"] = w.s;
    s.objects["S1"] = w.s1;
    s.objects["E"] = w.e;
    s.checks = {"residual_b", "residual_c"};
    return s;
}

Scenario gen_weak(std::uint64_t seed, bool symmetric) {
    Rng rng(mix64(seed, kSaltWeak));
    WeakInstance w;
    for (int attempt = 0; attempt < 400; ++attempt) {
        if (build_weak_instance(rng, symmetric, w))
            return scenario_of(w, symmetric ? "weak-mt-symmetric" : "weak-mt", seed);
    }
    fail("GenerationExhausted", "no valid instance after bounded retries");
}

// Candidate radii of circles concentric with `center` tangent to c, tagged
// internal/external.
struct ConcentricCandidate {
    double rho;
    bool internal;
};

std::vector<ConcentricCandidate> concentric_candidates(const Point& center, const Circle& c) {
    const double d = dist(center, c.center);
    std::vector<ConcentricCandidate> out;
    if (d - c.radius > 0.0) out.push_back({d - c.radius, false});
    out.push_back({d + c.radius, true});
    if (c.radius - d > 0.0) out.push_back({c.radius - d, true});
    return out;
}

} // namespace

Scenario gen_weak_mt(std::uint64_t seed) { return gen_weak(seed, false); }
Scenario gen_weak_mt_symmetric(std::uint64_t seed) { return gen_weak(seed, true); }

Report check_weak_mt(const Scenario& s, const Tol& tol) {
    Report rep;
    rep.scenario = s.name;
    rep.seed = s.seed;
    const Circle& abcd = s.circle("abcd");
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    const Line& lab = s.line("lineAB");
    const Line& lcd = s.line("lineCD");
    const double scale = abcd.radius;

    // Concentric circle tangent to both with opposite tangency types.
    double best_b = kInf;
    for (const auto& cw : concentric_candidates(abcd.center, omega))
        for (const auto& cw1 : concentric_candidates(abcd.center, omega1))
            if (cw.internal != cw1.internal)
                best_b = std::min(best_b, std::abs(cw.rho - cw1.rho));
    rep.set("residual_b", best_b / scale, 1e-7);

    // Pencil of the intersection point and the four-point circle: the member
    // tangent to one chord line must touch the other.
    auto meet = intersect(GObject{omega}, GObject{omega1}, tol);
    if (meet.empty()) fail("NoIntersection", "the two circles do not meet");
    const Point s_pt = meet.front();
    const Pencil pen =
        Pencil::make(CircleEq::point_circle(s_pt), CircleEq::of(abcd), tol);
    double best_c = kInf;
    for (const CircleEq& m : member_tangent_to_line(pen, lab, tol)) {
        const Circle mc = m.to_circle(tol);
        best_c = std::min(best_c, std::abs(std::abs(lcd.signed_dist(mc.center)) - mc.radius));
    }
    rep.set("residual_c", best_c / scale, 1e-7);
    rep.finalize();
    return rep;
}

namespace {

// Foot of the internal or external bisector from s on line pq.
Point bisector_foot(const Point& s, const Point& p, const Point& q, bool internal) {
    const double dp = dist(s, p), dq = dist(s, q);
    if (internal) return p + (q - p) * (dp / (dp + dq));
    return p + (q - p) * (dp / (dp - dq));
}

// Whether x lies strictly between p and q on their line.
bool between(const Point& x, const Point& p, const Point& q) {
    const double t = dot(x - p, q - p) / norm2(q - p);
    return t > 0.0 && t < 1.0;
}

// Midpoint of the arc pq of c on the same side of the chord as `with`.
Point arc_midpoint_with(const Circle& c, const Point& p, const Point& q, const Point& with) {
    const Line chord = Line::through(p, q);
    const double side = chord.signed_dist(with) >= 0.0 ? 1.0 : -1.0;
    return c.center + chord.normal() * (c.radius * side);
}

} // namespace

WeakMTTrace weak_mt_trace(const Scenario& s, const Tol& tol) {
    WeakMTTrace t;
    const Circle& kappa = s.circle("kappa");
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    const Circle& abcd = s.circle("abcd");
    const Line& lab = s.line("lineAB");
    const Line& lcd = s.line("lineCD");
    const Point &a = s.point("A"), &b = s.point("B"), &c = s.point("C"), &d = s.point("D");
    const double scale = abcd.radius;

    auto meet = intersect(GObject{omega}, GObject{omega1}, tol);
    if (meet.size() < 2) fail("NoIntersection", "trace requires two intersection points");
    t.S = meet[0];
    t.S1 = meet[1];
    t.E = intersect(GObject{lab}, GObject{lcd}, tol).at(0);

    // The tangent member of the pencil through S and the four-point circle;
    // where it touches each chord line decides between the internal and the
    // external bisector reading of the argument.
    const Pencil pen = Pencil::make(CircleEq::point_circle(t.S), CircleEq::of(abcd), tol);
    const Circle* best = nullptr;
    Circle best_store;
    double best_defect = kInf;
    for (const CircleEq& m : member_tangent_to_line(pen, lab, tol)) {
        const Circle mc = m.to_circle(tol);
        const double defect = std::abs(std::abs(lcd.signed_dist(mc.center)) - mc.radius);
        if (defect < best_defect) {
            best_defect = defect;
            best_store = mc;
            best = &best_store;
        }
    }
    if (!best) fail("NoIntersection", "no pencil member tangent to the first chord line");
    const bool inner1 = between(lab.foot(best->center), a, b);
    const bool inner2 = between(lcd.foot(best->center), c, d);

    t.T1 = bisector_foot(t.S, a, b, inner1);
    t.T2 = bisector_foot(t.S, c, d, inner2);
    // Internal feet pair with the arc midpoint away from S, external feet
    // with the midpoint of the arc containing S.
    t.W1 = inner1 ? arc_midpoint(omega, a, b, t.S, tol) : arc_midpoint_with(omega, a, b, t.S);
    t.W2 = inner2 ? arc_midpoint(omega1, c, d, t.S, tol)
                  : arc_midpoint_with(omega1, c, d, t.S);

    // Tangency points of the constructed tangent circle.
    t.V1 = lab.foot(kappa.center);
    t.V2 = lcd.foot(kappa.center);
    const Tangency kt = tangency(GObject{kappa}, GObject{omega1}, Tol{1e-6, 1e-6});
    const Point u = normalized(omega1.center - kappa.center);
    t.P = kt == Tangency::External ? kappa.center + u * kappa.radius
                                   : kappa.center - u * kappa.radius;
    if (kappa.radius > omega1.radius && kt == Tangency::Internal)
        t.P = kappa.center + u * kappa.radius;

    t.Q = second_intersection(t.V1, t.W1, omega, tol);
    auto ypt = intersect(GObject{Line::through(t.V1, t.W1)}, GObject{Line::through(t.V2, t.W2)},
                         tol);
    if (ypt.empty()) fail("DegenerateImage", "trace lines are parallel");
    t.Y = ypt[0];

    auto chord_ratio = [&](const Point& p, const Point& q, bool internal) {
        const double sum = dist(t.S, p) + dist(t.S, q);
        const double diff = std::abs(dist(t.S, p) - dist(t.S, q));
        return (internal ? sum : diff) / dist(p, q);
    };
    const double lhs = chord_ratio(a, b, inner1);
    const double rhs = std::sqrt(dist(t.S, t.W1) / dist(t.T1, t.W1));
    const double lhs2 = chord_ratio(c, d, inner2);
    const double rhs2 = std::sqrt(dist(t.S, t.W2) / dist(t.T2, t.W2));
    t.ratio_residual =
        std::max({std::abs(lhs - rhs), std::abs(lhs2 - rhs2), std::abs(lhs - lhs2)});

    t.parallel_residual =
        std::abs(cross(normalized(t.T2 - t.T1), normalized(t.W2 - t.W1)));
    t.sey_residual = std::abs(Line::through(t.S, t.E).signed_dist(t.Y)) / scale;
    const Circle wpq = circumcircle(t.W1, t.W2, t.P, tol);
    t.concyclic_residual = std::abs(dist(t.Q, wpq.center) - wpq.radius) / scale;
    t.foot_line_residual = std::abs(cross(t.T1 - t.S, t.W1 - t.S)) / (scale * scale);
    return t;
}

std::vector<Circle> sample_admissible_gammas(const Scenario& s, std::uint64_t seed, int count,
                                             const Tol& tol) {
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    const Circle& abcd = s.circle("abcd");
    const TangentCenterLocus locus = tangent_center_locus(omega, omega1, tol);
    Rng rng(mix64(seed, kSaltGamma));
    std::vector<Circle> out;
    const Tol loose{1e-7, 1e-7};
    for (int attempt = 0; attempt < 4000 && static_cast<int>(out.size()) < count; ++attempt) {
        const Point p = locus.at(rng.uniform(0, 6.283185307179586));
        const double rho = locus.tangent_radius(p, omega);
        if (rho < 0.05 * abcd.radius) continue;
        const Circle gamma{p, rho};
        const Tangency tw = tangency(GObject{gamma}, GObject{omega}, loose);
        const Tangency tw1 = tangency(GObject{gamma}, GObject{omega1}, loose);
        if (tw == Tangency::None || tw1 == Tangency::None) continue;
        if ((tw == Tangency::Internal) == (tw1 == Tangency::Internal)) continue;
        out.push_back(gamma);
    }
    if (static_cast<int>(out.size()) < count)
        fail("GenerationExhausted", "could not sample admissible tangent circles");
    return out;
}

Report check_simplified_mt(const Scenario& s, const Circle& gamma, const Tol& tol) {
    Report rep;
    rep.scenario = s.name;
    rep.seed = s.seed;
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    const Circle& abcd = s.circle("abcd");
    const Line& lab = s.line("lineAB");
    const Line& lcd = s.line("lineCD");
    const double scale = abcd.radius;

    const Tol loose{1e-6, 1e-6};
    const Tangency tw = tangency(GObject{gamma}, GObject{omega}, loose);
    const Tangency tw1 = tangency(GObject{gamma}, GObject{omega1}, loose);
    const bool admissible = tw != Tangency::None && tw1 != Tangency::None &&
                            (tw == Tangency::Internal) != (tw1 == Tangency::Internal);
    if (!admissible)
        fail("GammaNotAdmissible",
             "gamma must touch the two circles with one internal and one external tangency");

    const Pencil pen = Pencil::make(CircleEq::of(abcd), CircleEq::of(gamma), tol);
    double best = kInf;
    for (const CircleEq& m : member_tangent_to_line(pen, lab, tol)) {
        const Circle mc = m.to_circle(tol);
        best = std::min(best, std::abs(std::abs(lcd.signed_dist(mc.center)) - mc.radius));
    }
    rep.set("residual_simplified", best / scale, 1e-7);
    rep.finalize();
    return rep;
}

ConicQ four_point_conic(const Scenario& s, double t_gamma) {
    const ConicQ circ = conic_from_circle(s.circle("abcd"));
    const ConicQ pair = line_pair(s.line("lineAB"), s.line("lineCD"));
    // Normalize the two generators to comparable size so the parameter is
    // geometrically meaningful across instances.
    ConicQ out;
    out.m = (1.0 - t_gamma) * circ.canonical().m + t_gamma * pair.canonical().m;
    return out;
}

namespace {

bool conic_center_inside_both(const ConicQ& gamma, const Circle& omega, const Circle& omega1,
                              const Tol& tol) {
    try {
        const Point c = conic_center(gamma, tol);
        const double margin_w = 0.02 * omega.radius * omega.radius;
        const double margin_w1 = 0.02 * omega1.radius * omega1.radius;
        return power_of_point(c, omega) < -margin_w && power_of_point(c, omega1) < -margin_w1;
    } catch (const Error&) {
        return false;
    }
}

// True when the central conic has real points.
bool conic_is_real(const ConicQ& gamma, const Tol& tol) {
    try {
        const Point c = conic_center(gamma, tol);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(gamma.m.topLeftCorner<2, 2>());
        const double c0 = gamma.eval(c);
        const double l1 = es.eigenvalues()(0), l2 = es.eigenvalues()(1);
        if (l1 * l2 > 0.0) return c0 * l1 < 0.0; // ellipse: constant opposes the squares
        return true;                             // hyperbola
    } catch (const Error&) {
        return false;
    }
}

} // namespace

bool pick_main_theorem_gamma(const Scenario& s, std::uint64_t seed, double& t_gamma,
                             const Tol& tol) {
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    std::vector<double> valid;
    for (int k = -240; k <= 240; ++k) {
        const double t = k / 100.0;
        const ConicQ g = four_point_conic(s, t);
        if (std::abs(t) < 0.02) continue; // skip the circle itself; covered separately
        if (!conic_is_real(g, tol)) continue;
        if (!conic_center_inside_both(g, omega, omega1, tol)) continue;
        valid.push_back(t);
    }
    if (valid.empty()) return false;
    Rng rng(mix64(seed, kSaltGamma ^ 0xff));
    t_gamma = valid[rng.uniform_int(0, static_cast<int>(valid.size()) - 1)];
    return true;
}

namespace {

struct TangentGap {
    double ext;
    double inner;
};

TangentGap gaps(const Circle& probe, const Circle& target) {
    const double d = dist(probe.center, target.center);
    return {d - (probe.radius + target.radius), d - std::abs(probe.radius - target.radius)};
}

double min_gap(const Circle& probe, const Circle& target) {
    const TangentGap g = gaps(probe, target);
    return std::min(std::abs(g.ext), std::abs(g.inner));
}

} // namespace

Report check_main_theorem(const Scenario& s, double t_gamma, const Tol& tol) {
    Report rep;
    rep.scenario = s.name;
    rep.seed = s.seed;
    const Circle& omega = s.circle("omega");
    const Circle& omega1 = s.circle("omega1");
    const Circle& abcd = s.circle("abcd");
    const double scale = abcd.radius;

    const ConicQ gamma = four_point_conic(s, t_gamma);
    if (!conic_center_inside_both(gamma, omega, omega1, tol))
        fail("ConicCenterOutside", "the conic center must lie inside both circles");

    // Axis directions match the bisectors of the two chord lines.
    const auto [ax1, ax2] = conic_axes(gamma, tol);
    const Point d1 = s.line("lineAB").direction();
    const Point d2 = s.line("lineCD").direction();
    const Point bis1 = normalized(d1 + d2);
    const Point bis2 = normalized(d1 - d2);
    double axis_res = kInf;
    for (const Line* ax : {&ax1, &ax2}) {
        for (const Point* bis : {&bis1, &bis2}) {
            const double ang = std::asin(std::min(1.0, std::abs(cross(ax->direction(), *bis))));
            axis_res = std::min(axis_res, ang);
        }
    }
    rep.set("residual_axes", axis_res, 1e-8);

    // Slide the double-contact circle along each axis; root-find tangency to
    // omega, then report the tangency defect against omega1.
    double best = kInf;
    const Point center = conic_center(gamma, tol);
    for (int axis = 1; axis <= 2; ++axis) {
        auto circle_at = [&](double t) -> Circle {
            return bitangent_circle_on_axis(gamma, t, axis, tol);
        };
        auto gap_at = [&](double t, bool ext) -> double {
            const Circle bc = circle_at(t);
            const TangentGap g = gaps(bc, omega);
            return ext ? g.ext : g.inner;
        };
        const double span = 40.0 * scale + norm(center - abcd.center);
        const int n = 4000;
        for (bool ext : {true, false}) {
            bool have_prev = false;
            double prev_t = 0.0, prev_v = 0.0;
            for (int k = -n; k <= n; ++k) {
                const double t = span * k / n;
                double v;
                try {
                    v = gap_at(t, ext);
                } catch (const Error&) {
                    have_prev = false;
                    continue;
                }
                if (have_prev && (prev_v < 0) != (v < 0)) {
                    double lo = prev_t, hi = t;
                    double flo = prev_v;
                    for (int it = 0; it < 120; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        double fm;
                        try {
                            fm = gap_at(mid, ext);
                        } catch (const Error&) {
                            break;
                        }
                        if ((flo < 0) != (fm < 0)) {
                            hi = mid;
                        } else {
                            lo = mid;
                            flo = fm;
                        }
                    }
                    try {
                        const Circle solved = circle_at(0.5 * (lo + hi));
                        best = std::min(best, min_gap(solved, omega1));
                    } catch (const Error&) {
                    }
                }
                have_prev = true;
                prev_t = t;
                prev_v = v;
            }
        }
    }
    rep.set("residual_mt", best / scale, 1e-6);
    rep.finalize();
    return rep;
}

namespace {

double line_circle_gap(const Circle& c, const Line& l) {
    return std::abs(std::abs(l.signed_dist(c.center)) - c.radius);
}

struct Olympiad1Instance {
    Point a, b, c;
    double u_lo, u_hi;
};

struct KLMResult {
    Circle klm;
    Circle bced;
    Line de;
    bool ok;
};

KLMResult build_klm(const Point& a, const Point& b, const Point& c, double u, const Tol& tol) {
    KLMResult r{};
    r.ok = false;
    const Point d = a + (b - a) * u;
    const double ae = u * norm2(b - a) / norm(c - a);
    if (ae >= 0.97 * norm(c - a) || ae < 0.03) return r;
    const Point e = a + normalized(c - a) * ae;

    const Line be = Line::through(b, e);
    const Line cd = Line::through(c, d);
    auto kpt = intersect(GObject{be}, GObject{cd}, tol);
    if (kpt.size() != 1) return r;
    const Point k = kpt[0];

    // Reflect direction AK in the internal bisector direction at A.
    const Point u_ab = normalized(b - a), u_ac = normalized(c - a);
    const Point w = normalized(u_ab + u_ac);
    const Point dk = normalized(k - a);
    const Point refl = w * (2.0 * dot(dk, w)) - dk;
    const Line alm = Line::through(a, a + refl);

    auto lpt = intersect(GObject{alm}, GObject{be}, tol);
    auto mpt = intersect(GObject{alm}, GObject{cd}, tol);
    if (lpt.size() != 1 || mpt.size() != 1) return r;
    const Point l = lpt[0], m = mpt[0];
    const double sep = 1e-3;
    if (dist(k, l) < sep || dist(k, m) < sep || dist(l, m) < sep) return r;
    try {
        r.klm = circumcircle(k, l, m, tol);
        r.bced = circumcircle(b, c, e, tol);
    } catch (const Error&) {
        return r;
    }
    if (!on_circle(d, r.bced, Tol{1e-7, 1e-7})) return r;
    r.de = Line::through(d, e);
    r.ok = true;
    return r;
}

} // namespace

Report olympiad1_check(std::uint64_t seed) {
    Rng rng(mix64(seed, kSaltO1));
    const Tol tol;
    Report rep;
    rep.scenario = "olympiad1";
    rep.seed = seed;

    for (int attempt = 0; attempt < 64; ++attempt) {
        const Point a{rng.uniform(-0.35, 0.35), rng.uniform(1.0, 1.9)};
        const Point b{-1.0 + rng.uniform(-0.25, 0.25), 0.0};
        const Point c{1.0 + rng.uniform(-0.25, 0.25), 0.0};
        const double u_cap = std::min(0.92, 0.9 * norm2(c - a) / norm2(b - a));
        if (u_cap < 0.2) continue;

        auto defect = [&](double u) -> double {
            const KLMResult r = build_klm(a, b, c, u, tol);
            if (!r.ok) return std::numeric_limits<double>::quiet_NaN();
            return std::abs(r.de.signed_dist(r.klm.center)) - r.klm.radius;
        };

        const int n = 220;
        double prev = std::numeric_limits<double>::quiet_NaN();
        double prev_u = 0.0;
        double root = std::numeric_limits<double>::quiet_NaN();
        for (int k = 0; k <= n; ++k) {
            const double u = 0.08 + (u_cap - 0.08) * k / n;
            const double v = defect(u);
            if (!std::isnan(prev) && !std::isnan(v) && (prev < 0) != (v < 0)) {
                double lo = prev_u, hi = u, flo = prev;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = defect(mid);
                    if (std::isnan(fm)) break;
                    if ((flo < 0) != (fm < 0)) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                root = 0.5 * (lo + hi);
                break;
            }
            prev = v;
            prev_u = u;
        }
        if (std::isnan(root)) continue;

        const KLMResult r = build_klm(a, b, c, root, tol);
        if (!r.ok) continue;
        const double scale = circumcircle(a, b, c, tol).radius;
        const double de_res = line_circle_gap(r.klm, r.de) / scale;
        const double bc_res = line_circle_gap(r.klm, Line::through(b, c)) / scale;
        if (de_res > 1e-10) continue; // bisection failed to lock the root
        rep.set("residual_de", de_res, 1e-10);
        rep.set("residual_bc", bc_res, 1e-7);

        // The vertex has one polar with respect to both circles.
        const Line p1 = polar(a, r.bced, tol);
        const Line p2 = polar(a, r.klm, tol);
        rep.set("residual_polar", line_residual(p1, p2), 1e-8);
        rep.finalize();
        return rep;
    }
    fail("GenerationExhausted", "no tangent configuration found for this seed");
}

namespace {

Circle incircle_of(const Point& a, const Point& b, const Point& c) {
    const double la = dist(b, c), lb = dist(a, c), lc = dist(a, b);
    const double p = la + lb + lc;
    const Point center = (a * la + b * lb + c * lc) / p;
    const double s = 0.5 * p;
    const double area = 0.5 * std::abs(cross(b - a, c - a));
    (void)s;
    return Circle{center, 2.0 * area / p};
}

} // namespace

Report olympiad2_check(std::uint64_t seed) {
    Rng rng(mix64(seed, kSaltO2));
    Point a, b, c;
    for (int attempt = 0; attempt < 64; ++attempt) {
        b = Point{0, 0};
        c = Point{rng.uniform(1.6, 2.4), 0};
        a = Point{rng.uniform(0.25, 1.2), rng.uniform(0.9, 1.7)};
        const double s1 = dist(b, c), s2 = dist(a, c), s3 = dist(a, b);
        if (std::abs(s1 - s2) < 0.08 || std::abs(s2 - s3) < 0.08 || std::abs(s1 - s3) < 0.08)
            continue;
        break;
    }
    return olympiad2_check_triangle(a, b, c, seed);
}

Report olympiad2_check_triangle(const Point& a, const Point& b, const Point& c,
                                std::uint64_t seed_label) {
    const Tol tol;
    Report rep;
    rep.scenario = "olympiad2";
    rep.seed = seed_label;
    const Circle circ = circumcircle(a, b, c, tol);
    const double scale = circ.radius;

    auto ratios = [&](const Point& s) {
        return std::array<double, 3>{(dist(a, s) + dist(b, s)) / dist(a, b),
                                     (dist(b, s) + dist(c, s)) / dist(b, c),
                                     (dist(a, s) + dist(c, s)) / dist(a, c)};
    };
    auto variance = [&](const Point& s) {
        const auto r = ratios(s);
        const double mean = (r[0] + r[1] + r[2]) / 3.0;
        return ((r[0] - mean) * (r[0] - mean) + (r[1] - mean) * (r[1] - mean) +
                (r[2] - mean) * (r[2] - mean)) /
               3.0;
    };

    // Derivative-free simplex descent from the incenter.
    const Circle inc = incircle_of(a, b, c);
    Point simplex[3] = {inc.center, inc.center + Point{0.12 * inc.radius, 0},
                        inc.center + Point{0, 0.12 * inc.radius}};
    double value[3];
    for (int i = 0; i < 3; ++i) value[i] = variance(simplex[i]);
    for (int iter = 0; iter < 400; ++iter) {
        int order[3] = {0, 1, 2};
        std::sort(order, order + 3, [&](int i, int j) { return value[i] < value[j]; });
        const Point best = simplex[order[0]], mid = simplex[order[1]];
        const int worst = order[2];
        const Point centroid = (best + mid) * 0.5;
        const Point refl = centroid * 2.0 - simplex[worst];
        const double fr = variance(refl);
        if (fr < value[order[0]]) {
            const Point exp = centroid + (refl - centroid) * 2.0;
            const double fe = variance(exp);
            simplex[worst] = fe < fr ? exp : refl;
            value[worst] = std::min(fe, fr);
        } else if (fr < value[order[1]]) {
            simplex[worst] = refl;
            value[worst] = fr;
        } else {
            const Point con = centroid + (simplex[worst] - centroid) * 0.5;
            const double fc = variance(con);
            if (fc < value[worst]) {
                simplex[worst] = con;
                value[worst] = fc;
            } else {
                for (int i : {order[1], order[2]}) {
                    simplex[i] = best + (simplex[i] - best) * 0.5;
                    value[i] = variance(simplex[i]);
                }
            }
        }
        if (dist(simplex[0], simplex[1]) + dist(simplex[1], simplex[2]) < 1e-14 * scale) break;
    }
    int best_i = 0;
    for (int i = 1; i < 3; ++i)
        if (value[i] < value[best_i]) best_i = i;
    Point s_pt = simplex[best_i];

    // Newton polish on the pair of ratio differences with a numeric Jacobian.
    auto f2 = [&](const Point& p) {
        const auto r = ratios(p);
        return std::array<double, 2>{r[0] - r[1], r[1] - r[2]};
    };
    for (int it = 0; it < 8; ++it) {
        const double h = 1e-7 * scale;
        const auto f0 = f2(s_pt);
        const auto fx = f2(s_pt + Point{h, 0});
        const auto fy = f2(s_pt + Point{0, h});
        const double j00 = (fx[0] - f0[0]) / h, j01 = (fy[0] - f0[0]) / h;
        const double j10 = (fx[1] - f0[1]) / h, j11 = (fy[1] - f0[1]) / h;
        const double det = j00 * j11 - j01 * j10;
        if (std::abs(det) < 1e-14) break;
        const double dx = (-f0[0] * j11 + f0[1] * j01) / det;
        const double dy = (-j00 * f0[1] + j10 * f0[0]) / det;
        s_pt = s_pt + Point{dx, dy};
        if (std::hypot(dx, dy) < 1e-15 * scale) break;
    }
    if (variance(s_pt) > 1e-12) fail("SearchDiverged", "equal-ratio point search did not converge");
    rep.set("residual_search_variance", variance(s_pt), 1e-12);

    const Point a1 = second_intersection(s_pt, a, circ, tol);
    const Point b1 = second_intersection(s_pt, b, circ, tol);
    const Point c1 = second_intersection(s_pt, c, circ, tol);
    const Circle in0 = incircle_of(a, b, c);
    const Circle in1 = incircle_of(a1, b1, c1);
    rep.set("residual_incircle_center", dist(in0.center, in1.center) / scale, 1e-7);
    rep.set("residual_incircle_radius", std::abs(in0.radius - in1.radius) / scale, 1e-7);

    // The equal-ratio point is a limiting point of circumcircle and incircle.
    const Line p1 = polar(s_pt, circ, tol);
    const Line p2 = polar(s_pt, in0, tol);
    rep.set("residual_polar", line_residual(p1, p2), 1e-7);
    rep.finalize();
    return rep;
}

namespace {

struct PropsPair {
    Circle w1, w2;
    Point s, sp; // s is the limiting point inside w2 for nested pairs
};

PropsPair nested_pair(Rng& rng) {
    PropsPair g;
    g.w1 = Circle{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(1.0, 1.6)};
    const double r2 = g.w1.radius * rng.uniform(0.2, 0.45);
    const double d = rng.uniform(0.25, 0.8) * (g.w1.radius - r2);
    g.w2 = Circle{g.w1.center + dir_of(rng.uniform(0.2, 1.3)) * d, r2};
    const LimitingPair lim = sharygin_points(g.w1, g.w2);
    if (dist(lim.s, g.w2.center) < dist(lim.s_prime, g.w2.center)) {
        g.s = lim.s;
        g.sp = lim.s_prime;
    } else {
        g.s = lim.s_prime;
        g.sp = lim.s;
    }
    return g;
}

PropsPair separated_pair(Rng& rng) {
    PropsPair g;
    g.w1 = Circle{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.8, 1.4)};
    const double r2 = g.w1.radius * rng.uniform(0.45, 0.75);
    const double d = g.w1.radius + r2 + rng.uniform(0.4, 1.6);
    g.w2 = Circle{g.w1.center + dir_of(rng.uniform(0.2, 1.3)) * d, r2};
    const LimitingPair lim = sharygin_points(g.w1, g.w2);
    g.s = lim.s;
    g.sp = lim.s_prime;
    return g;
}

double pair_scale(const PropsPair& g) {
    return std::max({g.w1.radius, g.w2.radius, dist(g.w1.center, g.w2.center)});
}

bool secant_through(Rng& rng, const PropsPair& g, Point& a, Point& b, Point& c, Point& d) {
    for (int tries = 0; tries < 64; ++tries) {
        const Point inside =
            g.w2.center + dir_of(rng.uniform(0, 6.283185307179586)) *
                              (rng.uniform(0.0, 0.55) * g.w2.radius);
        const Line l = Line::from_point_normal(inside, dir_of(rng.uniform(0, 3.14159265)));
        const Point cl = normalized(g.w2.center - g.w1.center);
        const double ca = std::abs(dot(l.direction(), cl));
        if (ca > 0.97 || ca < 0.2) continue;
        if (std::abs(l.signed_dist(g.w1.center)) > 0.82 * g.w1.radius) continue;
        if (std::abs(l.signed_dist(g.s)) < 0.3 * g.w2.radius) continue;
        Point p1a, p1b, p2a, p2b;
        if (!chord_points(g.w1, l, 0.05 * g.w1.radius, p1a, p1b)) continue;
        if (!chord_points(g.w2, l, 0.05 * g.w2.radius, p2a, p2b)) continue;
        const double margin = 0.05 * g.w1.radius;
        if (dist(p1a, p2a) < margin || dist(p1a, p2b) < margin || dist(p1b, p2a) < margin ||
            dist(p1b, p2b) < margin)
            continue;
        if (dist(g.s, p1a) < margin || dist(g.s, p1b) < margin) continue;
        a = p1a;
        b = p1b;
        c = p2a;
        d = p2b;
        return true;
    }
    return false;
}

bool tangent_chord(Rng& rng, const PropsPair& g, Point& a, Point& b, Point& x) {
    for (int tries = 0; tries < 64; ++tries) {
        x = g.w2.center + dir_of(rng.uniform(0, 6.283185307179586)) * g.w2.radius;
        const Line t = Line::from_point_normal(x, x - g.w2.center);
        if (std::abs(t.signed_dist(g.w1.center)) > 0.85 * g.w1.radius) continue;
        Point p, q;
        if (!chord_points(g.w1, t, 0.1 * g.w1.radius, p, q)) continue;
        a = p;
        b = q;
        return true;
    }
    return false;
}

template <typename F>
double control_max(const Point& s, double scale, F&& residual_at) {
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double ang = 6.283185307179586 * k / 8.0;
        worst = std::max(worst, residual_at(s + dir_of(ang) * (0.01 * scale)));
    }
    return worst;
}

} // namespace

Report properties_check(std::uint64_t seed) {
    Rng rng(mix64(seed, kSaltProps));
    const Tol tol;
    Report rep;
    rep.scenario = "properties";
    rep.seed = seed;

    for (int attempt = 0; attempt < 64; ++attempt) {
        const PropsPair nest = nested_pair(rng);
        const PropsPair sep = separated_pair(rng);
        const double scale = pair_scale(nest);

        // Polar coincidence and concentric inversion at both limiting points,
        // on both kinds of pair.
        double polar_res = 0.0, invert_res = 0.0;
        for (const PropsPair* g : {&nest, &sep}) {
            for (const Point* s : {&g->s, &g->sp}) {
                polar_res = std::max(polar_res,
                                     line_residual(polar(*s, g->w1, tol), polar(*s, g->w2, tol)));
                const Circle i1 = std::get<Circle>(invert(*s, 1.0, GObject{g->w1}, tol));
                const Circle i2 = std::get<Circle>(invert(*s, 1.0, GObject{g->w2}, tol));
                const double local = std::max({norm(i1.center - *s), i1.radius, 1.0});
                invert_res = std::max(invert_res, dist(i1.center, i2.center) / local);
            }
        }

        Point a, b, c, d, x;
        if (!secant_through(rng, nest, a, b, c, d)) continue;
        const auto p1 = property1_check(nest.s, nest.w1, nest.w2, a, b, c, d, tol);
        const double p1_res = p1.collinearity_residual / scale;
        const double p1_ctrl = control_max(nest.s, scale, [&](const Point& bad) {
            return property1_check(bad, nest.w1, nest.w2, a, b, c, d, tol).collinearity_residual /
                   scale;
        });
        const double p4_res = property4_check(nest.s, a, b, c, d);
        const double p4_ctrl = control_max(nest.s, scale, [&](const Point& bad) {
            return property4_check(bad, a, b, c, d);
        });

        Point ta, tb;
        if (!tangent_chord(rng, nest, ta, tb, x)) continue;
        const double p2_res = property2_check(nest.s, nest.w2, ta, tb, tol);
        const double p2_ctrl = control_max(nest.s, scale, [&](const Point& bad) {
            return property2_check(bad, nest.w2, ta, tb, tol);
        });

        Point ta2, tb2, x2;
        if (!tangent_chord(rng, nest, ta2, tb2, x2)) continue;
        if (dist(x, x2) < 0.05 * nest.w2.radius) continue;
        const double p3_res =
            std::abs(property3_ratio(nest.s, ta, tb) - property3_ratio(nest.s, ta2, tb2));

        rep.set("lemma_polar", polar_res, 1e-9);
        rep.set("lemma_concentric", invert_res, 1e-9);
        rep.set("prop1_collinear", p1_res, 1e-8);
        rep.set("prop2_bisector", p2_res, 1e-8);
        rep.set("prop3_ratio_spread", p3_res, 1e-8);
        rep.set("prop4_angles", p4_res, 1e-8);
        rep.set("prop1_control_shortfall", std::max(0.0, 1e-3 - p1_ctrl), 0.0);
        rep.set("prop2_control_shortfall", std::max(0.0, 1e-3 - p2_ctrl), 0.0);
        rep.set("prop4_control_shortfall", std::max(0.0, 1e-3 - p4_ctrl), 0.0);
        rep.finalize();
        return rep;
    }
    fail("GenerationExhausted", "no valid property configuration for this seed");
}

} // namespace sharygin
