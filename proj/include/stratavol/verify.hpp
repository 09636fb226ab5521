#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stratavol::verify {

/// One identity checked by a suite.
struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// bivariate, multivariate, walls, oracle-p, oracle-sts (in this order).
const std::vector<std::string>& suite_names();

/// Runs a named suite at its default desk-scale bounds, or every suite for
/// "all". An exception inside a check is reported as a failed check.
/// Throws std::invalid_argument for an unknown name.
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed = 0);

}  // namespace stratavol::verify
