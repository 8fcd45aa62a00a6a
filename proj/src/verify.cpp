#include "feather/verify.hpp"

namespace feather {

void for_each_claim(u128 max, const std::function<void(const Claim&)>& sink) {
    for (u128 v = 1; v <= max; v += 2) {
        const Odd x(v);
        sink(rule_one(x));
        for (const Claim& c : rule_two(x)) {
            sink(c);
        }
        if (auto c = rule_two_up(x)) {
            sink(*c);
        }
        switch (classify_type(x)) {
        case NumberType::A: sink(claim_r_a(x)); break;
        case NumberType::B: sink(claim_r_b(x)); break;
        case NumberType::C: sink(claim_r_c(x)); break;
        }
        if (classify_type(x) != NumberType::B) {
            u128 anchor = 3 * v;
            for (unsigned n = 1; anchor <= max; ++n, anchor *= 3) {
                for (const Claim& c : rule_three_full(x, n)) {
                    sink(c);
                }
                for (const Claim& c : rule_four_full(x, n)) {
                    sink(c);
                }
            }
        }
        if (auto p = rule_five_params(x)) {
            for (const Claim& c : rule_five_full(p->x, p->n)) {
                sink(c);
            }
        }
        const Variety var = variety_classify(x);
        if (var.kind != VarietyKind::None && var.k > 0) {
            sink(variety_reduce(x));
        }
    }
}

namespace {

// p / 3^n when 3^n divides p.
std::optional<u128> divide_pow3(u128 p, unsigned n) {
    for (unsigned j = 0; j < n; ++j) {
        if (p % 3 != 0) {
            return std::nullopt;
        }
        p /= 3;
    }
    return p;
}

bool rederive_full(const Claim& c) {
    if (!c.params.n || !c.params.i) {
        return false;
    }
    const unsigned n = *c.params.n;
    const unsigned i = *c.params.i;
    const u128 l = c.lhs.value();
    const u128 r = c.rhs.value();
    if (i > n || n > 80) {
        return false;
    }
    switch (c.rule) {
    case RuleId::R3: {
        const auto x = divide_pow3(r, n);
        if (!x || i == 0 || *x % 3 == 0) {
            return false;
        }
        const u128 m = checked_mul(checked_mul(checked_pow(4, i), checked_pow(3, n - i)), *x);
        const u128 vm = checked_affine(m, 4, 1);
        return l == vm || l == checked_affine(vm, 2, 1);
    }
    case RuleId::R4: {
        const auto x = divide_pow3((r - 1) / 2, n);
        if (!x || i == 0 || *x % 3 == 0) {
            return false;
        }
        const u128 m = checked_mul(checked_mul(checked_pow(4, i), checked_pow(3, n - i)), *x);
        const u128 sm = checked_affine(m, 2, 1);
        return l == sm || l == checked_affine(sm, 2, 1);
    }
    case RuleId::R5: {
        const auto x = divide_pow3((r + 1) / 2, n);
        if (!x || *x % 3 == 0 || ((r + 1) / 2) % 4 != 1) {
            return false;
        }
        u128 y = checked_mul(checked_pow(3, n - i), *x) * 2 - 1;
        for (unsigned s = 0; s < i; ++s) {
            y = checked_affine(y, 2, 1);
        }
        return (i > 0 && l == y) || l == checked_affine(y, 2, 1);
    }
    default: return false;
    }
}

} // namespace

bool rederive(const Claim& c) {
    const u128 l = c.lhs.value();
    const u128 r = c.rhs.value();
    try {
        switch (c.rule) {
        case RuleId::R1: return r == checked_affine(l, 4, 1);
        case RuleId::R2: return r == checked_affine(l, 2, 1) && rule_two_links_up(c.lhs);
        case RuleId::Ra: return classify_type(c.lhs) == NumberType::A && 3 * r == 2 * l - 1;
        case RuleId::Rb:
            return classify_type(c.lhs) == NumberType::B && checked_mul(r - 1, 3) == checked_mul(l, 16);
        case RuleId::Rc: return classify_type(c.lhs) == NumberType::C && checked_mul(r, 3) == checked_mul(l, 4) - 1;
        case RuleId::R3:
        case RuleId::R4:
        case RuleId::R5: return rederive_full(c);
        case RuleId::VarietyReduce: {
            const Variety v = variety_classify(c.lhs);
            if (v.kind == VarietyKind::None || v.k == 0 || c.params.k != v.k) {
                return false;
            }
            const u128 core = checked_mul(checked_pow(3, v.k), v.b);
            return r == (v.kind == VarietyKind::S ? checked_affine(core, 2, 1) : checked_affine(core, 4, 1));
        }
        }
    } catch (const OverflowError&) {
        return false;
    }
    return false;
}

VerifyReport verify_claims(u128 max, const std::vector<Claim>& extra, std::size_t step_bound) {
    VerifyReport report;
    auto check = [&](const Claim& c) {
        ++report.claims;
        const OracleResult o = equivalent_oracle(c.lhs, c.rhs, step_bound);
        const bool oracle_ok = o.verdict == Verdict::Confirmed;
        const bool shape_ok = rederive(c);
        report.bound_hits += o.bound_hit ? 1 : 0;
        report.oracle_failures += oracle_ok ? 0 : 1;
        report.structural_failures += shape_ok ? 0 : 1;
        if ((!oracle_ok || !shape_ok) && report.first_failures.size() < 10) {
            report.first_failures.push_back(c);
        }
    };
    for_each_claim(max, check);
    for (const Claim& c : extra) {
        check(c);
    }
    return report;
}

} // namespace feather
