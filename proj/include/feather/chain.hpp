#ifndef FEATHER_CHAIN_HPP
#define FEATHER_CHAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "feather/rules.hpp"

namespace feather {

/// One macro-step of the A-branch follower: from == to under `rule`.
struct ChainStep {
    Odd from;
    Odd to;
    RuleId rule;

    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// Macro-steps, each a run of the simplified actions:
///   A with a mod 8 == 1 (an A_g head): iterate r_a until the value leaves type A (R5)
///   other A:                           same iteration, labelled Ra
///   B = 3^n m:  r_b, then r_c while type C; lands on V(4^n m)          (R3)
///   C = S(3^n m): r_c while type C; lands on S(4^n m)                  (R4)
/// For B and C the Rule-3/4 target is taken when it is type A; otherwise the
/// Rule-2 step x == S(x) is preferred when it exists.
/// 1 has no macro-step (it is the fixed point of r_c); calling with 1 throws.
ChainStep macro_step(Odd x);

enum class ChainStop {
    BelowBound,      // produced a value < bound
    ReachedOne,      // start was 1
    CycleDetected,   // produced a value seen earlier in the chain
    BudgetExceeded,  // step budget used up
    Overflow,        // next value does not fit in 128 bits
};

std::string_view name(ChainStop s);

struct Chain {
    Odd start;
    std::vector<ChainStep> steps;
    ChainStop stop;
};

inline constexpr std::size_t kDefaultChainBudget = 10'000;

/// Follows macro-steps from start until a produced value drops below
/// target_bound, a value repeats, or the budget runs out. Non-terminal stops
/// are reported through Chain::stop, not thrown.
Chain follow_a_branch(Odd start, u128 target_bound, std::size_t budget = kDefaultChainBudget);

/// Default bound for a start x: S(x), the top of the next binary-tree row
/// for a Mersenne start.
u128 default_chain_bound(Odd start);

} // namespace feather

#endif // FEATHER_CHAIN_HPP
