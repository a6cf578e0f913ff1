#pragma once

#include <string>
#include <vector>

namespace parkpoly {

struct CheckResult {
    std::string name;  // "suite/check"
    bool pass = false;
    std::string details;  // on failure: exact values of both sides
};

/// Registered suite names (excluding the umbrella "all").
std::vector<std::string> suite_names();

/// Run every check of one suite, or of all suites for "all".
/// Throws std::domain_error for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite);

/// Run a single check by its "suite/check" name.
CheckResult run_check(const std::string& name);

}  // namespace parkpoly
