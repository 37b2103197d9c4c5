#pragma once

#include <string>
#include <vector>

#include "adjalg/hopf.hpp"

namespace adjalg {

// Named Hopf algebras usable from the CLI and the verification suite.
// Group algebras: c2 c3 c4 c6 c2c2 s3 d4 q8 a4 d6; function algebras:
// fn-s3 fn-c2; plus sweedler and the base field k.
HopfPtr builtin_hopf(const std::string& name);
std::vector<std::string> builtin_names();

// Underlying group of a group-algebra or function-algebra builtin.
Group builtin_group(const std::string& name);

// A named surjection H -> Q used by the verification suite.
struct NamedQuotient {
    std::string hopf;
    std::string description;
    HopfMap map;
};

// Canonical quotient of a builtin: normal-subgroup quotient for group
// algebras (by element names), sweedler -> kC2, fn-s3 -> fn of a subgroup.
HopfMap builtin_quotient(const std::string& name);

// All surjections exercised by `verify`: one canonical quotient per
// builtin that has one, plus the counit quotients.
std::vector<NamedQuotient> registry_quotients();

}  // namespace adjalg
