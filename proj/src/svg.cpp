#include "sharygin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sharygin/conics.hpp"
#include "sharygin/error.hpp"
#include "sharygin/pencil.hpp"

namespace sharygin {

namespace {

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool empty = true;

    void add(const Point& p) {
        if (empty) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            empty = false;
            return;
        }
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Mapper {
    Box world;
    double scale = 1.0;
    double ox = 0.0, oy = 0.0;
    int width, height;

    Point to_px(const Point& p) const {
        return {(p.x - world.x0) * scale + ox, (world.y1 - p.y) * scale + oy};
    }
};

const char* kind_color(const SceneObject& obj) {
    if (std::holds_alternative<Circle>(obj)) return "#1f77b4";
    if (std::holds_alternative<Cycle>(obj)) return "#2ca02c";
    if (std::holds_alternative<Point>(obj)) return "#d62728";
    if (std::holds_alternative<Line>(obj)) return "#7f7f7f";
    return "#9467bd";
}

// Parameter interval of p0 + t*d inside the world box (slab clipping).
bool clip_line(const Box& b, const Point& p0, const Point& d, double& t0, double& t1) {
    t0 = -1e18;
    t1 = 1e18;
    const double lo[2] = {b.x0, b.y0}, hi[2] = {b.x1, b.y1};
    const double po[2] = {p0.x, p0.y}, dd[2] = {d.x, d.y};
    for (int i = 0; i < 2; ++i) {
        if (std::abs(dd[i]) < 1e-15) {
            if (po[i] < lo[i] || po[i] > hi[i]) return false;
            continue;
        }
        double a = (lo[i] - po[i]) / dd[i];
        double b2 = (hi[i] - po[i]) / dd[i];
        if (a > b2) std::swap(a, b2);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b2);
    }
    return t0 < t1;
}

std::vector<std::vector<Point>> conic_polylines(const ConicQ& q, const Box& view, int segments) {
    std::vector<std::vector<Point>> out;
    Point center;
    try {
        center = conic_center(q);
    } catch (const Error&) {
        return out; // degenerate conics are not drawn
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q.m.topLeftCorner<2, 2>());
    const double l1 = es.eigenvalues()(0), l2 = es.eigenvalues()(1);
    const Point u1{es.eigenvectors()(0, 0), es.eigenvectors()(1, 0)};
    const Point u2{es.eigenvectors()(0, 1), es.eigenvectors()(1, 1)};
    const double c0 = q.eval(center);
    const double A = -c0 / l1, B = -c0 / l2;
    const double diag = std::hypot(view.x1 - view.x0, view.y1 - view.y0);
    if (A > 0 && B > 0) { // ellipse
        std::vector<Point> poly;
        poly.reserve(segments + 1);
        const double a = std::sqrt(A), b = std::sqrt(B);
        for (int k = 0; k <= segments; ++k) {
            const double ang = 2.0 * 3.14159265358979323846 * k / segments;
            poly.push_back(center + u1 * (a * std::cos(ang)) + u2 * (b * std::sin(ang)));
        }
        out.push_back(std::move(poly));
    } else if (A * B < 0) { // hyperbola: two branches along the positive-A axis
        const bool a_first = A > 0;
        const double a = std::sqrt(a_first ? A : B);
        const double b = std::sqrt(a_first ? -B : -A);
        const Point& ut = a_first ? u1 : u2;
        const Point& un = a_first ? u2 : u1;
        const double tmax = std::acosh(std::max(2.0, 3.0 * diag / a));
        for (double sign : {1.0, -1.0}) {
            std::vector<Point> poly;
            poly.reserve(segments + 1);
            for (int k = 0; k <= segments; ++k) {
                const double t = -tmax + 2.0 * tmax * k / segments;
                poly.push_back(center + ut * (sign * a * std::cosh(t)) + un * (b * std::sinh(t)));
            }
            out.push_back(std::move(poly));
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Scenario& s, const SvgOptions& opt) {
    Box box;
    for (const auto& [id, obj] : s.objects) {
        if (const Point* p = std::get_if<Point>(&obj)) {
            box.add(*p);
        } else if (const Circle* c = std::get_if<Circle>(&obj)) {
            box.add(c->center + Point{c->radius, c->radius});
            box.add(c->center - Point{c->radius, c->radius});
        } else if (const Cycle* cy = std::get_if<Cycle>(&obj)) {
            const double r = std::abs(cy->r);
            box.add(cy->center() + Point{r, r});
            box.add(cy->center() - Point{r, r});
        } else if (const ConicQ* q = std::get_if<ConicQ>(&obj)) {
            try {
                const Point c = conic_center(*q);
                box.add(c + Point{1, 1});
                box.add(c - Point{1, 1});
            } catch (const Error&) {
            }
        }
    }
    if (box.empty) {
        box.add({-1, -1});
        box.add({1, 1});
    }
    // Square margin around the content.
    const double mx = (box.x1 - box.x0 + 1e-9) * opt.margin_frac;
    const double my = (box.y1 - box.y0 + 1e-9) * opt.margin_frac;
    box.x0 -= mx;
    box.x1 += mx;
    box.y0 -= my;
    box.y1 += my;

    Mapper map;
    map.world = box;
    map.width = opt.width;
    map.height = opt.height;
    const double sx = opt.width / (box.x1 - box.x0);
    const double sy = opt.height / (box.y1 - box.y0);
    map.scale = std::min(sx, sy);
    map.ox = 0.5 * (opt.width - (box.x1 - box.x0) * map.scale);
    map.oy = 0.5 * (opt.height - (box.y1 - box.y0) * map.scale);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<!-- scenario " << s.name << " seed " << s.seed << " -->\n";

    for (const auto& [id, obj] : s.objects) {
        const char* color = kind_color(obj);
        if (const Point* p = std::get_if<Point>(&obj)) {
            const Point q = map.to_px(*p);
            svg << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            svg << "<text x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y - 5)
                << "\" font-size=\"12\" fill=\"" << color << "\">" << id << "</text>\n";
        } else if (const Circle* c = std::get_if<Circle>(&obj)) {
            const Point q = map.to_px(c->center);
            svg << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
                << num(c->radius * map.scale) << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
            svg << "<text x=\"" << num(q.x) << "\" y=\""
                << num(q.y - c->radius * map.scale - 4) << "\" font-size=\"12\" fill=\"" << color
                << "\">" << id << "</text>\n";
        } else if (const Cycle* cy = std::get_if<Cycle>(&obj)) {
            const Point q = map.to_px(cy->center());
            const char* dash = cy->r < 0 ? " stroke-dasharray=\"6 3\"" : "";
            svg << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
                << num(std::abs(cy->r) * map.scale) << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"" << dash << "/>\n";
            svg << "<text x=\"" << num(q.x) << "\" y=\""
                << num(q.y - std::abs(cy->r) * map.scale - 4) << "\" font-size=\"12\" fill=\""
                << color << "\">" << id << "</text>\n";
        } else if (const Line* l = std::get_if<Line>(&obj)) {
            double t0, t1;
            if (clip_line(box, l->point(), l->direction(), t0, t1)) {
                const Point a = map.to_px(l->point() + l->direction() * t0);
                const Point b = map.to_px(l->point() + l->direction() * t1);
                svg << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
                    << num(b.x) << "\" y2=\"" << num(b.y) << "\" stroke=\"" << color
                    << "\" stroke-width=\"1\"/>\n";
                const Point mid = (a + b) * 0.5;
                svg << "<text x=\"" << num(mid.x + 4) << "\" y=\"" << num(mid.y - 4)
                    << "\" font-size=\"12\" fill=\"" << color << "\">" << id << "</text>\n";
            }
        } else {
            const ConicQ& q = std::get<ConicQ>(obj);
            for (const auto& poly : conic_polylines(q, box, opt.conic_segments)) {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"";
                for (size_t k = 0; k < poly.size(); ++k) {
                    const Point px = map.to_px(poly[k]);
                    if (k) svg << ' ';
                    svg << num(px.x) << ',' << num(px.y);
                }
                svg << "\"/>\n";
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_limiting_points_svg(const Circle& c1, const Circle& c2,
                                       const SvgOptions& opt) {
    const LimitingPair lim = sharygin_points(c1, c2);
    Scenario s;
    s.name = "limiting-points";
    s.objects["c1"] = c1;
    s.objects["c2"] = c2;
    s.objects["S"] = lim.s;
    s.objects["Sp"] = lim.s_prime;
    const double sep = dist(lim.s, lim.s_prime);
    if (sep > 1e-9) s.objects["polar"] = polar(lim.s, c1);
    return render_svg(s, opt);
}

} // namespace sharygin
