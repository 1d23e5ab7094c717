#include "sharygin/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sharygin/error.hpp"

namespace sharygin {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << " col " << col << ": " << what;
    fail("ParseError", os.str());
}

struct Tokens {
    std::vector<std::string> items;
    std::vector<int> cols;
};

Tokens split_tokens(const std::string& text) {
    Tokens t;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || text[i] == '#') break;
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        t.items.push_back(text.substr(start, i - start));
        t.cols.push_back(static_cast<int>(start) + 1);
    }
    return t;
}

double parse_number(const Tokens& t, size_t idx, int line) {
    const std::string& s = t.items[idx];
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        parse_fail(line, t.cols[idx], "expected a number, got '" + s + "'");
    }
    if (used != s.size()) parse_fail(line, t.cols[idx], "trailing characters in number '" + s + "'");
    return v;
}

void need(const Tokens& t, size_t count, int line, const char* what) {
    if (t.items.size() != count)
        parse_fail(line, t.cols.empty() ? 1 : t.cols[0],
                   std::string("expected ") + what);
}

} // namespace

Scenario load_scenario(std::istream& in) {
    Scenario s;
    std::string raw;
    int line = 0;
    bool have_name = false;
    while (std::getline(in, raw)) {
        ++line;
        Tokens t = split_tokens(raw);
        if (t.items.empty()) continue;
        const std::string& key = t.items[0];
        if (key == "scenario") {
            need(t, 2, line, "scenario <name>");
            s.name = t.items[1];
            have_name = true;
        } else if (key == "seed") {
            need(t, 2, line, "seed <integer>");
            try {
                s.seed = std::stoull(t.items[1]);
            } catch (const std::exception&) {
                parse_fail(line, t.cols[1], "invalid seed '" + t.items[1] + "'");
            }
        } else if (key == "check") {
            need(t, 2, line, "check <id>");
            s.checks.push_back(t.items[1]);
        } else if (key == "object") {
            if (t.items.size() < 3) parse_fail(line, t.cols[0], "object <id> <kind> <params...>");
            const std::string& id = t.items[1];
            if (s.objects.count(id)) parse_fail(line, t.cols[1], "duplicate object id '" + id + "'");
            const std::string& kind = t.items[2];
            if (kind == "point") {
                need(t, 5, line, "object <id> point <x> <y>");
                s.objects[id] = Point{parse_number(t, 3, line), parse_number(t, 4, line)};
            } else if (kind == "line") {
                need(t, 6, line, "object <id> line <a> <b> <c>");
                s.objects[id] = Line::make(parse_number(t, 3, line), parse_number(t, 4, line),
                                           parse_number(t, 5, line));
            } else if (kind == "circle") {
                need(t, 6, line, "object <id> circle <cx> <cy> <r>");
                const double r = parse_number(t, 5, line);
                if (!(r > 0)) parse_fail(line, t.cols[5], "circle radius must be positive");
                s.objects[id] =
                    Circle{{parse_number(t, 3, line), parse_number(t, 4, line)}, r};
            } else if (kind == "cycle") {
                need(t, 6, line, "object <id> cycle <x> <y> <r>");
                s.objects[id] = Cycle{parse_number(t, 3, line), parse_number(t, 4, line),
                                      parse_number(t, 5, line)};
            } else if (kind == "conic") {
                need(t, 9, line, "object <id> conic <m00> <m01> <m02> <m11> <m12> <m22>");
                ConicQ q;
                const double m00 = parse_number(t, 3, line), m01 = parse_number(t, 4, line);
                const double m02 = parse_number(t, 5, line), m11 = parse_number(t, 6, line);
                const double m12 = parse_number(t, 7, line), m22 = parse_number(t, 8, line);
                q.m << m00, m01, m02, m01, m11, m12, m02, m12, m22;
                s.objects[id] = q;
            } else {
                parse_fail(line, t.cols[2], "unknown object kind '" + kind + "'");
            }
        } else {
            parse_fail(line, t.cols[0], "unknown directive '" + key + "'");
        }
    }
    if (!have_name) fail("ParseError", "line 1 col 1: missing 'scenario <name>' directive");
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileError", "cannot open '" + path + "'");
    return load_scenario(in);
}

void save_scenario(const Scenario& s, std::ostream& out) {
    out << "scenario " << s.name << "\n";
    out << "seed " << s.seed << "\n";
    for (const auto& [id, obj] : s.objects) {
        out << "object " << id << ' ';
        if (const Point* p = std::get_if<Point>(&obj)) {
            out << "point " << fmt_full(p->x) << ' ' << fmt_full(p->y);
        } else if (const Line* l = std::get_if<Line>(&obj)) {
            out << "line " << fmt_full(l->a) << ' ' << fmt_full(l->b) << ' ' << fmt_full(l->c);
        } else if (const Circle* c = std::get_if<Circle>(&obj)) {
            out << "circle " << fmt_full(c->center.x) << ' ' << fmt_full(c->center.y) << ' '
                << fmt_full(c->radius);
        } else if (const Cycle* cy = std::get_if<Cycle>(&obj)) {
            out << "cycle " << fmt_full(cy->x) << ' ' << fmt_full(cy->y) << ' '
                << fmt_full(cy->r);
        } else {
            const ConicQ& q = std::get<ConicQ>(obj);
            out << "conic " << fmt_full(q.m(0, 0)) << ' ' << fmt_full(q.m(0, 1)) << ' '
                << fmt_full(q.m(0, 2)) << ' ' << fmt_full(q.m(1, 1)) << ' '
                << fmt_full(q.m(1, 2)) << ' ' << fmt_full(q.m(2, 2));
        }
        out << "\n";
    }
    for (const std::string& c : s.checks) out << "check " << c << "\n";
}

void save_scenario_file(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("FileError", "cannot open '" + path + "' for writing");
    save_scenario(s, out);
}

std::string reports_to_json(const std::string& suite, const std::vector<Report>& reports) {
    nlohmann::ordered_json root;
    root["suite"] = suite;
    root["count"] = reports.size();
    bool all = true;
    double worst = 0.0;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Report& r : reports) {
        all = all && r.pass;
        worst = std::max(worst, r.max_residual());
        nlohmann::ordered_json jr;
        jr["scenario"] = r.scenario;
        jr["seed"] = r.seed;
        jr["pass"] = r.pass;
        nlohmann::ordered_json res, tolj;
        for (const auto& [k, v] : r.residuals) {
            res[k] = v;
            tolj[k] = r.tolerances.at(k);
        }
        jr["residuals"] = res;
        jr["tolerances"] = tolj;
        jr["wall_ms"] = r.wall_ms;
        arr.push_back(jr);
    }
    root["all_pass"] = all;
    root["max_residual"] = worst;
    root["reports"] = arr;
    return root.dump(2) + "\n";
}

} // namespace sharygin
