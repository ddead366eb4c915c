#pragma once

// The named verification checks behind `confdunkl verify`: each runs one
// invariant suite against the configured context and reports a residual.

#include "confdunkl/config.hpp"

#include <string>
#include <vector>

namespace confdunkl {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // 0 for exact checks that hold
    std::string detail;
};

// the full battery, in a fixed order
std::vector<CheckResult> run_verification(const RunConfig& cfg);

std::vector<std::string> verification_check_names();

}  // namespace confdunkl
