#pragma once

#include <string>
#include <vector>

namespace coreparts {

enum class Envelope { Small, Full };

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    std::vector<std::string> failures;  // first few failure messages
    double seconds = 0.0;
};

/// Names of the verification suites, in execution order.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite. Throws std::invalid_argument for an unknown name.
/// Exceptions raised inside a suite are recorded as failures.
SuiteResult run_suite(const std::string& name, Envelope envelope, int jobs = 1);

} // namespace coreparts
