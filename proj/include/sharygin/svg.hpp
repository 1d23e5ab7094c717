#pragma once

#include <string>

#include "sharygin/theorems.hpp"

namespace sharygin {

struct SvgOptions {
    int width = 800;
    int height = 800;
    double margin_frac = 0.08;
    int conic_segments = 256;
};

/// Deterministic SVG rendering of a scenario: fixed element order (objects by
/// id), fixed number formatting, auto-fitted viewport.
std::string render_svg(const Scenario& s, const SvgOptions& opt = {});

/// Convenience figure for a circle pair with its limiting points and polar.
std::string render_limiting_points_svg(const Circle& c1, const Circle& c2,
                                       const SvgOptions& opt = {});

} // namespace sharygin
