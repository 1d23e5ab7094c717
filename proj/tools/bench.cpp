// Timing comparison of the serial reference and the OpenMP batch runner.
#include <cstdio>
#include <cstdlib>

#include "sharygin/verify.hpp"

using namespace sharygin;

int main(int argc, char** argv) {
    const int seeds = argc > 1 ? std::atoi(argv[1]) : 50;
    std::printf("%-14s %8s %12s %12s %8s\n", "suite", "seeds", "serial ms", "openmp ms",
                "speedup");
    for (Suite suite : {Suite::Properties, Suite::WeakMT, Suite::SimplifiedMT,
                        Suite::MainTheorem, Suite::Olympiad1, Suite::Olympiad2}) {
        const SuiteSummary serial = run_suite(suite, seeds, false);
        const SuiteSummary parallel = run_suite(suite, seeds, true);
        bool identical = serial.reports.size() == parallel.reports.size();
        for (size_t i = 0; identical && i < serial.reports.size(); ++i) {
            identical = serial.reports[i].residuals == parallel.reports[i].residuals &&
                        serial.reports[i].pass == parallel.reports[i].pass;
        }
        std::printf("%-14s %8d %12.1f %12.1f %7.2fx %s\n", suite_name(suite), seeds,
                    serial.wall_ms, parallel.wall_ms, serial.wall_ms / parallel.wall_ms,
                    identical ? "" : "MISMATCH");
    }
    return 0;
}
