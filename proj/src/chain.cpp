#include "feather/chain.hpp"

#include <unordered_set>

namespace feather {

namespace {

Odd iterate_while(Odd x, NumberType t, Odd (*action)(Odd)) {
    while (classify_type(x) == t) {
        x = action(x);
    }
    return x;
}

} // namespace

ChainStep macro_step(Odd x) {
    if (x.value() == 1) {
        throw DomainError("macro_step: 1 is a fixed point");
    }
    switch (classify_type(x)) {
    case NumberType::A: {
        const RuleId rule = x.value() % 8 == 1 ? RuleId::R5 : RuleId::Ra;
        return {x, iterate_while(x, NumberType::A, r_a), rule};
    }
    case NumberType::B: {
        const Odd target = iterate_while(r_b(x), NumberType::C, r_c);
        if (classify_type(target) != NumberType::A && rule_two_links_up(x)) {
            return {x, act_s(x), RuleId::R2};
        }
        return {x, target, RuleId::R3};
    }
    case NumberType::C: {
        const Odd target = iterate_while(x, NumberType::C, r_c);
        if (classify_type(target) != NumberType::A && rule_two_links_up(x)) {
            return {x, act_s(x), RuleId::R2};
        }
        return {x, target, RuleId::R4};
    }
    }
    throw DomainError("macro_step: unreachable");
}

std::string_view name(ChainStop s) {
    switch (s) {
    case ChainStop::BelowBound: return "below_bound";
    case ChainStop::ReachedOne: return "reached_one";
    case ChainStop::CycleDetected: return "cycle_detected";
    case ChainStop::BudgetExceeded: return "budget_exceeded";
    case ChainStop::Overflow: return "overflow";
    }
    return "?";
}

Chain follow_a_branch(Odd start, u128 target_bound, std::size_t budget) {
    Chain chain{start, {}, ChainStop::ReachedOne};
    if (start.value() == 1) {
        return chain;
    }
    std::unordered_set<u128, U128Hash> seen{start.value()};
    Odd cur = start;
    for (;;) {
        if (cur.value() == 1) {
            chain.stop = ChainStop::ReachedOne;
            return chain;
        }
        if (chain.steps.size() >= budget) {
            chain.stop = ChainStop::BudgetExceeded;
            return chain;
        }
        ChainStep step{cur, cur, RuleId::R1};
        try {
            step = macro_step(cur);
        } catch (const OverflowError&) {
            chain.stop = ChainStop::Overflow;
            return chain;
        }
        chain.steps.push_back(step);
        if (step.to.value() < target_bound) {
            chain.stop = ChainStop::BelowBound;
            return chain;
        }
        if (!seen.insert(step.to.value()).second) {
            chain.stop = ChainStop::CycleDetected;
            return chain;
        }
        cur = step.to;
    }
}

u128 default_chain_bound(Odd start) { return act_s(start).value(); }

} // namespace feather
