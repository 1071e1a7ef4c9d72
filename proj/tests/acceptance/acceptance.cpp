// Acceptance run: one PASS/FAIL line per criterion, with wall time against its limit.
// Exit status is the number of failing criteria (capped at 1).

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "binomeq/reproduce.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    binomeq::ReproduceConfig cfg;
    std::vector<unsigned> only;
    bool quiet = false;
    app.add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 10))->delimiter(',');
    app.add_flag("--slow", cfg.slow, "include k = 15, 17, 19");
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    app.add_option("--seed", cfg.seed, "property-suite seed");
    app.add_option("--cases", cfg.property_cases, "cases per randomized property")->check(CLI::Range(500, 1000000));
    app.add_flag("--quiet", quiet, "omit detail lines");
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto& [id, title] : binomeq::criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto r = binomeq::run_criterion(id, cfg);
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
        std::cout << "criterion " << (id < 10 ? " " : "") << id << ": " << (r.passed ? "PASS" : "FAIL") << "  "
                  << timing << "  " << title << " -- " << r.summary << "\n";
        if (!quiet || !r.passed) {
            for (const auto& d : r.details) std::cout << "    " << d << "\n";
        }
        std::cout.flush();
        if (!r.passed) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
