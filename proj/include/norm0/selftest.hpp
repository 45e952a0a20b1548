#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "norm0/cache.hpp"

namespace norm0 {

struct SelfTestCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs the regression checks anchored in the published statements
/// (factor orders, relations and non-relations, counterexamples, commutation
/// rules, the v(N) <= 2 sweep). Errors raised while building a group are
/// recorded as failed checks.
std::vector<SelfTestCheck> run_selftest(std::size_t budget = kDefaultBudget,
                                        std::uint64_t factor_cap = kDefaultFactorCap,
                                        const GroupCache* cache = nullptr);

} // namespace norm0
