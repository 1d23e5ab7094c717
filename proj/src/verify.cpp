#include "sharygin/verify.hpp"

#include <chrono>
#include <cmath>

#include "sharygin/error.hpp"
#include "sharygin/rng.hpp"

namespace sharygin {

Suite suite_from_name(const std::string& name) {
    if (name == "properties") return Suite::Properties;
    if (name == "weak-mt") return Suite::WeakMT;
    if (name == "simplified-mt") return Suite::SimplifiedMT;
    if (name == "main") return Suite::MainTheorem;
    if (name == "olympiad1") return Suite::Olympiad1;
    if (name == "olympiad2") return Suite::Olympiad2;
    fail("UnknownSuite", "no suite named '" + name + "'");
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::Properties: return "properties";
        case Suite::WeakMT: return "weak-mt";
        case Suite::SimplifiedMT: return "simplified-mt";
        case Suite::MainTheorem: return "main";
        case Suite::Olympiad1: return "olympiad1";
        case Suite::Olympiad2: return "olympiad2";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Report weak_mt_seed(std::uint64_t seed) {
    const Scenario s = gen_weak_mt(seed);
    Report r = check_weak_mt(s);
    const WeakMTTrace t = weak_mt_trace(s);
    r.set("trace_ratio", t.ratio_residual, 1e-7);
    r.set("trace_parallel", t.parallel_residual, 1e-7);
    r.set("trace_sey_collinear", t.sey_residual, 1e-7);
    r.set("trace_concyclic", t.concyclic_residual, 1e-7);
    r.finalize();
    return r;
}

Report simplified_seed(std::uint64_t seed) {
    const Scenario s = gen_weak_mt(seed);
    const auto gammas = sample_admissible_gammas(s, seed, 3);
    Report r;
    r.scenario = "simplified-mt";
    r.seed = seed;
    for (size_t k = 0; k < gammas.size(); ++k) {
        const Report one = check_simplified_mt(s, gammas[k]);
        r.set("residual_gamma" + std::to_string(k), one.residuals.at("residual_simplified"),
              1e-7);
    }
    r.finalize();
    return r;
}

Report main_theorem_seed(std::uint64_t seed) {
    // Retry the instance until some pencil member passes the center
    // precondition; the member choice itself stays seeded and unbiased.
    Scenario s = gen_weak_mt(seed);
    double t_gamma = 0.0;
    int sub = 0;
    while (!pick_main_theorem_gamma(s, seed, t_gamma)) {
        if (++sub > 64) fail("GenerationExhausted", "no admissible conic member found");
        s = gen_weak_mt(mix64(seed, 0xabcd00 + sub));
    }
    return check_main_theorem(s, t_gamma);
}

Report dispatch(Suite suite, std::uint64_t seed) {
    switch (suite) {
        case Suite::Properties: return properties_check(seed);
        case Suite::WeakMT: return weak_mt_seed(seed);
        case Suite::SimplifiedMT: return simplified_seed(seed);
        case Suite::MainTheorem: return main_theorem_seed(seed);
        case Suite::Olympiad1: return olympiad1_check(seed);
        case Suite::Olympiad2: return olympiad2_check(seed);
    }
    fail("UnknownSuite", "bad suite value");
}

} // namespace

Report run_seed(Suite suite, std::uint64_t seed) {
    const auto start = Clock::now();
    Report r;
    try {
        r = dispatch(suite, seed);
    } catch (const Error& e) {
        r.scenario = suite_name(suite);
        r.seed = seed;
        r.set(std::string("error_") + e.code(), 1.0, 0.0);
        r.finalize();
    }
    r.wall_ms = ms_since(start);
    return r;
}

SuiteSummary run_suite(Suite suite, int seeds, bool parallel) {
    SuiteSummary out;
    out.reports.resize(static_cast<size_t>(seeds));
    const auto start = Clock::now();
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < seeds; ++i)
            out.reports[static_cast<size_t>(i)] = run_seed(suite, static_cast<std::uint64_t>(i));
    } else {
        for (int i = 0; i < seeds; ++i)
            out.reports[static_cast<size_t>(i)] = run_seed(suite, static_cast<std::uint64_t>(i));
    }
    out.wall_ms = ms_since(start);
    out.all_pass = true;
    for (const Report& r : out.reports) {
        out.all_pass = out.all_pass && r.pass;
        out.max_residual = std::max(out.max_residual, r.max_residual());
    }
    return out;
}

} // namespace sharygin
