#pragma once

#include <algorithm>
#include <cmath>

namespace sharygin {

/// Single tolerance policy used by every predicate in the library.
/// A quantity x is "zero at scale s" when |x| <= abs_eps + rel_eps*|s|.
struct Tol {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    double eps(double scale = 1.0) const { return abs_eps + rel_eps * std::abs(scale); }

    bool zero(double x, double scale = 1.0) const { return std::abs(x) <= eps(scale); }

    bool near(double a, double b) const {
        return std::abs(a - b) <= eps(std::max(std::abs(a), std::abs(b)));
    }

    bool near(double a, double b, double scale) const { return std::abs(a - b) <= eps(scale); }
};

} // namespace sharygin
