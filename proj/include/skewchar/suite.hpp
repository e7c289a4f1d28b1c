#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewchar {

struct SuiteOptions {
    int jobs = 1;
    std::uint64_t seed = 20240917;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ok = false;
    long cases = 0;
    double seconds = 0;
    std::string detail;  // first failure, or a short summary
};

constexpr int kCriterionCount = 13;

// Runs acceptance criterion `id` (1..13).
CriterionResult run_criterion(int id, const SuiteOptions& opts = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& opts = {});

// Number of worker threads from SKEWCHAR_JOBS, or `fallback` when unset.
int jobs_from_env(int fallback = 1);

}  // namespace skewchar
