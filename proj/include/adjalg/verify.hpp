#pragma once

#include <string>
#include <vector>

namespace adjalg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The acceptance suite: one result per criterion. `fast` restricts every
// "all builtins" quantifier to a documented small subset (see README);
// the full suite is the release gate.
std::vector<CheckResult> acceptance_suite(bool fast);

}  // namespace adjalg
