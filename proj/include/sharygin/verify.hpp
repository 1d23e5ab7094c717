#pragma once

#include <string>
#include <vector>

#include "sharygin/theorems.hpp"

namespace sharygin {

enum class Suite { Properties, WeakMT, SimplifiedMT, MainTheorem, Olympiad1, Olympiad2 };

Suite suite_from_name(const std::string& name); // throws UnknownSuite
const char* suite_name(Suite s);

struct SuiteSummary {
    std::vector<Report> reports; // indexed by seed
    bool all_pass = false;
    double max_residual = 0.0;
    double wall_ms = 0.0;
};

/// Evaluate one suite seed; pure, so seeds may run concurrently.
Report run_seed(Suite suite, std::uint64_t seed);

/// Batch runner. The parallel path evaluates seeds with OpenMP; the serial
/// path is the reference used by tests and the benchmark. Both produce
/// identical reports, ordered by seed.
SuiteSummary run_suite(Suite suite, int seeds, bool parallel = true);

} // namespace sharygin
