// acceptance.cpp
// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "eab/verify.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= eab::kCriteria; ++id) {
        const eab::CriterionResult r = eab::run_criterion(id);
        std::printf("%s criterion %d: %s (%.3fs, budget %.0fs)\n", r.pass() ? "PASS" : "FAIL", id, r.title.c_str(),
                    r.seconds, r.budget_seconds);
        for (const auto& l : r.lines)
            if (!l.pass) std::printf("    failed: %s: %s\n", l.name.c_str(), l.detail.c_str());
        if (!r.within_budget()) std::printf("    failed: over time budget\n");
        failed += !r.pass();
    }
    std::printf("%d/%d criteria passed\n", eab::kCriteria - failed, eab::kCriteria);
    return failed ? 1 : 0;
}
