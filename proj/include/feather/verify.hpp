#ifndef FEATHER_VERIFY_HPP
#define FEATHER_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "feather/rules.hpp"

namespace feather {

/// Calls sink for every claim of every generator invoked on inputs <= max:
/// Rule 1, both Rule 2 forms, R_a/R_b/R_c, Rule 3/4 for (x, n) with
/// 3^n x <= max, Rule 5 for every head a <= max, and the Variety reduction.
void for_each_claim(u128 max, const std::function<void(const Claim&)>& sink);

/// Recomputes rhs from lhs, rule and params. False when the claim is not one
/// its generator can produce.
bool rederive(const Claim& c);

struct VerifyReport {
    std::size_t claims = 0;
    std::size_t oracle_failures = 0;
    std::size_t structural_failures = 0;
    std::size_t bound_hits = 0;
    std::vector<Claim> first_failures;  // at most 10

    [[nodiscard]] bool ok() const { return oracle_failures == 0 && structural_failures == 0; }
};

/// Checks every claim of for_each_claim(max), plus `extra`, against the
/// orbit oracle and rederive().
VerifyReport verify_claims(u128 max, const std::vector<Claim>& extra = {},
                           std::size_t step_bound = kDefaultStepBound);

} // namespace feather

#endif // FEATHER_VERIFY_HPP
