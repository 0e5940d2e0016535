#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace plethora::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string counterexample; ///< first failing check, empty on pass
};

/// Names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string> &suite_names();

/// Throws PreconditionError on an unknown suite name.
SuiteResult run_suite(const std::string &name, unsigned order);

std::vector<SuiteResult> run_all(unsigned order);

} // namespace plethora::verify
