// verify.hpp
// The ten acceptance checks, shared by `eab verify` and the acceptance test.

#pragma once

#include <string>
#include <vector>

namespace eab {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<CheckLine> lines;

    bool within_budget() const { return seconds < budget_seconds; }
    // every line passes and the run finished inside its time budget
    bool pass() const;
};

constexpr int kCriteria = 10;

CriterionResult run_criterion(int id);

// all | counts | orders | defect | exhaustive | matrix | catalog
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_names();

}  // namespace eab
