#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sharygin/error.hpp"
#include "sharygin/hyperbolic.hpp"
#include "sharygin/scenario.hpp"
#include "sharygin/svg.hpp"
#include "sharygin/verify.hpp"

using namespace sharygin;

namespace {

std::vector<double> parse_numbers(const std::string& text, size_t count, const char* what) {
    std::istringstream is(text);
    std::vector<double> out;
    double v;
    while (is >> v) out.push_back(v);
    if (out.size() != count)
        fail("InvalidInput", std::string("expected ") + std::to_string(count) + " numbers for " +
                                 what + ", got '" + text + "'");
    return out;
}

Circle parse_circle(const std::string& text) {
    const auto v = parse_numbers(text, 3, "a circle (cx cy r)");
    if (!(v[2] > 0)) fail("InvalidInput", "circle radius must be positive");
    return Circle{{v[0], v[1]}, v[2]};
}

Cycle parse_cycle(const std::string& text) {
    const auto v = parse_numbers(text, 3, "a cycle (x y r)");
    return Cycle{v[0], v[1], v[2]};
}

std::string show(const Point& p) { return fmt12(p.x) + " " + fmt12(p.y); }
std::string show(const Cycle& c) {
    return fmt12(c.x) + " " + fmt12(c.y) + " " + fmt12(c.r);
}
std::string show(const Circle& c) {
    return fmt12(c.center.x) + " " + fmt12(c.center.y) + " " + fmt12(c.radius);
}
std::string show(const Line& l) {
    return fmt12(l.a) + " " + fmt12(l.b) + " " + fmt12(l.c);
}
std::string show(const Axis& a) {
    return fmt12(a.dir.x) + " " + fmt12(a.dir.y) + " " + fmt12(a.offset);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("FileError", "cannot open '" + path + "' for writing");
    out << content;
}

int cmd_points(const std::string& c1s, const std::string& c2s, const std::string& file,
               const std::string& svg_path) {
    Circle c1, c2;
    if (!file.empty()) {
        const Scenario s = load_scenario_file(file);
        std::vector<Circle> circles;
        for (const auto& [id, obj] : s.objects)
            if (const Circle* c = std::get_if<Circle>(&obj)) circles.push_back(*c);
        if (circles.size() != 2)
            fail("InvalidInput", "scenario file must contain exactly two circles");
        c1 = circles[0];
        c2 = circles[1];
    } else {
        c1 = parse_circle(c1s);
        c2 = parse_circle(c2s);
    }
    const LimitingPair lim = sharygin_points(c1, c2);
    std::printf("S  = (%s, %s)\n", fmt12(lim.s.x).c_str(), fmt12(lim.s.y).c_str());
    std::printf("S' = (%s, %s)\n", fmt12(lim.s_prime.x).c_str(), fmt12(lim.s_prime.y).c_str());
    if (!svg_path.empty()) write_file(svg_path, render_limiting_points_svg(c1, c2));
    return 0;
}

struct TransformArgs {
    std::string kind;
    double rho = 0.0;
    double v = 0.0;
    double k2 = 1.0;
    std::string absolute;
    std::string center;
    std::vector<std::string> cycles;
    std::vector<std::string> axes;
    std::vector<std::string> circles;
    std::vector<std::string> lines;
    std::vector<std::string> points;
    bool check_tangency = false;
};

int cmd_transform(const TransformArgs& args) {
    std::vector<Cycle> in_cycles, out_cycles;
    for (const auto& t : args.cycles) in_cycles.push_back(parse_cycle(t));

    if (args.kind == "lorentz") {
        for (const Cycle& c : in_cycles) out_cycles.push_back(lorentz(args.v, c));
        for (const Cycle& c : out_cycles) std::printf("cycle %s\n", show(c).c_str());
    } else if (args.kind == "inflate") {
        for (const Cycle& c : in_cycles) out_cycles.push_back(inflate(c, args.rho));
        for (const Cycle& c : out_cycles) std::printf("cycle %s\n", show(c).c_str());
        for (const auto& t : args.axes) {
            const auto v = parse_numbers(t, 3, "an axis (dx dy offset)");
            const Axis img = inflate(Axis::make({v[0], v[1]}, v[2]), args.rho);
            std::printf("axis %s\n", show(img).c_str());
        }
    } else if (args.kind == "hyp-inflate") {
        if (args.absolute.empty()) fail("InvalidInput", "hyp-inflate requires --absolute");
        const Absolute abs{parse_circle(args.absolute)};
        for (const Cycle& c : in_cycles) {
            const HObject img = hyp_inflate(c, args.rho, abs);
            if (const Cycle* cy = std::get_if<Cycle>(&img)) {
                out_cycles.push_back(*cy);
                std::printf("cycle %s\n", show(*cy).c_str());
            } else if (const Axis* ax = std::get_if<Axis>(&img)) {
                std::printf("axis %s\n", show(*ax).c_str());
            } else {
                std::printf("point %s\n", show(std::get<Point>(img)).c_str());
            }
        }
        for (const auto& t : args.axes) {
            const auto v = parse_numbers(t, 3, "an axis (dx dy offset)");
            const HObject img = hyp_inflate(Axis::make({v[0], v[1]}, v[2]), args.rho, abs);
            if (const Cycle* cy = std::get_if<Cycle>(&img))
                std::printf("cycle %s\n", show(*cy).c_str());
            else if (const Axis* ax = std::get_if<Axis>(&img))
                std::printf("axis %s\n", show(*ax).c_str());
            else
                std::printf("point %s\n", show(std::get<Point>(img)).c_str());
        }
    } else if (args.kind == "invert") {
        if (args.center.empty()) fail("InvalidInput", "invert requires --inv-center");
        const auto c = parse_numbers(args.center, 2, "the inversion center (x y)");
        const Point z{c[0], c[1]};
        auto emit = [&](const GObject& obj) {
            const GObject img = invert(z, args.k2, obj);
            if (const Circle* cc = std::get_if<Circle>(&img))
                std::printf("circle %s\n", show(*cc).c_str());
            else if (const Line* l = std::get_if<Line>(&img))
                std::printf("line %s\n", show(*l).c_str());
            else
                std::printf("point %s\n", show(std::get<Point>(img)).c_str());
        };
        for (const auto& t : args.circles) emit(GObject{parse_circle(t)});
        for (const auto& t : args.lines) {
            const auto v = parse_numbers(t, 3, "a line (a b c)");
            emit(GObject{Line::make(v[0], v[1], v[2])});
        }
        for (const auto& t : args.points) {
            const auto v = parse_numbers(t, 2, "a point (x y)");
            emit(GObject{Point{v[0], v[1]}});
        }
    } else {
        fail("InvalidInput", "unknown transform kind '" + args.kind + "'");
    }

    if (args.check_tangency && in_cycles.size() == out_cycles.size()) {
        std::printf("tangency preservation:\n");
        for (size_t i = 0; i < in_cycles.size(); ++i)
            for (size_t j = i + 1; j < in_cycles.size(); ++j) {
                const bool before = tangent_cycles(in_cycles[i], in_cycles[j]);
                const bool after = tangent_cycles(out_cycles[i], out_cycles[j]);
                std::printf("  pair %zu-%zu: q %s -> %s, tangent %s -> %s\n", i, j,
                            fmt12(q(in_cycles[i], in_cycles[j])).c_str(),
                            fmt12(q(out_cycles[i], out_cycles[j])).c_str(),
                            before ? "yes" : "no", after ? "yes" : "no");
            }
    }
    return 0;
}

int cmd_verify(const std::string& suite_str, int seeds, const std::string& json_path,
               bool serial) {
    const Suite suite = suite_from_name(suite_str);
    const SuiteSummary sum = run_suite(suite, seeds, !serial);
    int passed = 0;
    for (const Report& r : sum.reports) passed += r.pass ? 1 : 0;
    std::printf("suite %-13s %d/%d pass, max residual %s, %.1f ms\n", suite_str.c_str(), passed,
                seeds, fmt12(sum.max_residual).c_str(), sum.wall_ms);
    for (const Report& r : sum.reports) {
        if (r.pass) continue;
        std::printf("  seed %llu FAIL:", static_cast<unsigned long long>(r.seed));
        for (const auto& [check, value] : r.residuals)
            if (!(value <= r.tolerances.at(check)))
                std::printf(" %s=%s", check.c_str(), fmt12(value).c_str());
        std::printf("\n");
    }
    if (!json_path.empty()) write_file(json_path, reports_to_json(suite_str, sum.reports));
    return sum.all_pass ? 0 : 1;
}

int cmd_render(const std::string& scn_path, const std::string& svg_path) {
    const Scenario s = load_scenario_file(scn_path);
    write_file(svg_path, render_svg(s));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle-pencil geometry toolkit"};
    app.require_subcommand(1);

    // points: limiting points of two circles
    auto* points = app.add_subcommand("points", "limiting (Sharygin) points of two circles");
    std::string c1s, c2s, file, svg_path;
    points->add_option("c1", c1s, "first circle as 'cx cy r'");
    points->add_option("c2", c2s, "second circle as 'cx cy r'");
    points->add_option("--file", file, "scenario file holding exactly two circles");
    points->add_option("--svg", svg_path, "write a figure of the configuration");

    // transform
    auto* tr = app.add_subcommand("transform", "apply a cycle/plane transformation");
    TransformArgs targs;
    tr->add_option("kind", targs.kind, "inflate | lorentz | hyp-inflate | invert")->required();
    tr->add_option("--rho", targs.rho, "inflation radius");
    tr->add_option("--v", targs.v, "boost speed, |v| < 1");
    tr->add_option("--k2", targs.k2, "inversion power");
    tr->add_option("--absolute", targs.absolute, "absolute circle 'cx cy r'");
    tr->add_option("--inv-center", targs.center, "inversion center 'x y'");
    tr->add_option("--cycle", targs.cycles, "cycle 'x y r' (repeatable)");
    tr->add_option("--axis", targs.axes, "axis 'dx dy offset' (repeatable)");
    tr->add_option("--circle", targs.circles, "circle 'cx cy r' (repeatable)");
    tr->add_option("--line", targs.lines, "line 'a b c' (repeatable)");
    tr->add_option("--point", targs.points, "point 'x y' (repeatable)");
    tr->add_flag("--check-tangency", targs.check_tangency,
                 "print the pairwise tangency table before and after");

    // verify
    auto* vf = app.add_subcommand("verify", "run a seeded verification suite");
    std::string suite_str, json_path;
    int seeds = 10;
    bool serial = false;
    vf->add_option("suite", suite_str,
                   "properties | weak-mt | simplified-mt | main | olympiad1 | olympiad2")
        ->required();
    vf->add_option("--seeds", seeds, "number of seeded instances");
    vf->add_option("--json", json_path, "write the full report as JSON");
    vf->add_flag("--serial", serial, "run the serial reference path");

    // render
    auto* rd = app.add_subcommand("render", "render a scenario file to SVG");
    std::string scn_path, out_path;
    rd->add_option("scenario", scn_path, "scenario file")->required();
    rd->add_option("output", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    try {
        if (points->parsed()) {
            if (file.empty() && (c1s.empty() || c2s.empty()))
                fail("InvalidInput", "give two circles or --file");
            return cmd_points(c1s, c2s, file, svg_path);
        }
        if (tr->parsed()) return cmd_transform(targs);
        if (vf->parsed()) {
            if (seeds <= 0) fail("InvalidInput", "--seeds must be positive");
            return cmd_verify(suite_str, seeds, json_path, serial);
        }
        if (rd->parsed()) return cmd_render(scn_path, out_path);
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
