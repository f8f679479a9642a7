#pragma once

#include "t3kit/ech.hpp"

#include <string>
#include <vector>

namespace t3kit {

struct SelftestOptions {
    // Verification grid for the well-conditioned probe forms (the degeneracy
    // suites keep their own fine grid: they test detection, not robustness).
    int grid_size = 4096;
    // Swapping the h identification here demonstrates that the naturality
    // suite pins the convention.
    HConvention h_convention{};
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

} // namespace t3kit
