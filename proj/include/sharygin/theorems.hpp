#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sharygin/conics.hpp"
#include "sharygin/cycles.hpp"
#include "sharygin/geom.hpp"
#include "sharygin/pencil.hpp"
#include "sharygin/tol.hpp"

namespace sharygin {

using SceneObject = std::variant<Point, Line, Circle, Cycle, ConicQ>;

/// Named, seeded verification instance. A seed reproduces the instance
/// bit-identically.
struct Scenario {
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, SceneObject> objects;
    std::vector<std::string> checks;

    bool has(const std::string& id) const { return objects.count(id) != 0; }
    const Point& point(const std::string& id) const;
    const Line& line(const std::string& id) const;
    const Circle& circle(const std::string& id) const;
    const Cycle& cycle(const std::string& id) const;
    const ConicQ& conic(const std::string& id) const;
};

/// Residuals of one scenario run; pass iff every residual is within its
/// tolerance.
struct Report {
    std::string scenario;
    std::uint64_t seed = 0;
    std::map<std::string, double> residuals;
    std::map<std::string, double> tolerances;
    bool pass = false;
    double wall_ms = 0.0;

    void set(const std::string& check, double residual, double tolerance);
    void finalize();
    double max_residual() const;
};

/// Named points of the arc-midpoint proof trace, with its identity residuals.
struct WeakMTTrace {
    Point S, S1, E, T1, T2, W1, W2, V1, V2, P, Q, Y;
    double ratio_residual = 0.0;       // (SA+SB)/AB = sqrt(SW1/T1W1), both chords
    double parallel_residual = 0.0;    // T1T2 parallel to W1W2
    double sey_residual = 0.0;         // S, E, Y collinear
    double concyclic_residual = 0.0;   // W1, W2, P, Q on one circle
    double foot_line_residual = 0.0;   // S, T1, W1 collinear
};

/// All circles through a and b tangent to k, via inversion centered at a.
std::vector<Circle> circle_through_2pts_tangent_to_circle(const Point& a, const Point& b,
                                                          const Circle& k,
                                                          const Tol& tol = {});

/// Instances where a circle tangent to both chord lines and both circles
/// exists by construction.
Scenario gen_weak_mt(std::uint64_t seed);

/// Symmetric family: the tangent circle is concentric with the four-point
/// circle, so the concentric-tangency condition holds exactly.
Scenario gen_weak_mt_symmetric(std::uint64_t seed);

Report check_weak_mt(const Scenario& s, const Tol& tol = {});

WeakMTTrace weak_mt_trace(const Scenario& s, const Tol& tol = {});

Report check_simplified_mt(const Scenario& s, const Circle& gamma, const Tol& tol = {});

/// Admissible middle circles for the simplified statement, sampled from the
/// locus of centers of one-internal-one-external tangent circles.
std::vector<Circle> sample_admissible_gammas(const Scenario& s, std::uint64_t seed, int count,
                                             const Tol& tol = {});

/// Conic through the four base points at pencil parameter t (0 is the
/// four-point circle, 1 the chord-line pair).
ConicQ four_point_conic(const Scenario& s, double t_gamma);

/// Seeded choice of a conic parameter whose center lies strictly inside both
/// circles; returns false when the instance admits none.
bool pick_main_theorem_gamma(const Scenario& s, std::uint64_t seed, double& t_gamma,
                             const Tol& tol = {});

Report check_main_theorem(const Scenario& s, double t_gamma, const Tol& tol = {});

Report olympiad1_check(std::uint64_t seed);
Report olympiad2_check(std::uint64_t seed);

/// Equal-ratio point machinery on a concrete triangle (used by the seeded
/// checker and by the exact symmetric cases in tests).
Report olympiad2_check_triangle(const Point& a, const Point& b, const Point& c,
                                std::uint64_t seed_label = 0);

/// Per-seed limiting-point suite: polar/inversion lemmas, the four chord
/// properties, and their perturbation controls.
Report properties_check(std::uint64_t seed);

} // namespace sharygin
