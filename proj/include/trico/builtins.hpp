#pragma once

#include "cover.hpp"

#include <string>
#include <vector>

namespace trico {

// The worked examples shipped with the tool, in cover-file syntax.
struct BuiltinCase {
    std::string name;
    std::string text;
    CaseLabel expected;
};

const std::vector<BuiltinCase>& builtin_cases();

// throws ValidationError for an unknown name
const BuiltinCase& builtin_case(const std::string& name);

struct AppendixCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // what went wrong, empty on pass
};

// Reproduces the published closed-form data for the worked examples:
// discriminant expansions, chart transitions, Jacobian ideal bases, and
// the local types of the singular branch points.
std::vector<AppendixCheck> run_appendix_checks(unsigned long long spair_budget = 100000);

}  // namespace trico
