#pragma once

#include <string>
#include <vector>

namespace k3 {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// Runs the cross-verification suite ("qseries", "admissible", "chow",
/// "bounds" or "all"). Each check pits two independent computation routes
/// against each other. max_n <= 0 selects per-suite defaults; larger values
/// deepen the exhaustive checks.
VerifyReport run_verify(const std::string& suite, long max_n = 0);

}  // namespace k3
