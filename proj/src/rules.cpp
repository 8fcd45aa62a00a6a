#include "feather/rules.hpp"

namespace feather {

namespace {

void require_type(Odd x, NumberType t, std::string_view op) {
    if (classify_type(x) != t) {
        throw TypeMismatch(std::string(op) + ": " + to_string(x) + " is type " +
                           std::string(name(classify_type(x))) + ", expected " +
                           std::string(name(t)));
    }
}

void require_non_b(Odd x, std::string_view op) {
    if (classify_type(x) == NumberType::B) {
        throw TypeMismatch(std::string(op) + ": " + to_string(x) + " is type B");
    }
}

// 4^i 3^(n-i) x, which is even for i >= 1.
u128 mixed_power(Odd x, unsigned n, unsigned i) {
    return checked_mul(checked_mul(checked_pow(4, i), checked_pow(3, n - i)), x.value());
}

} // namespace

std::string_view name(RuleId r) {
    switch (r) {
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::R5: return "R5";
    case RuleId::Ra: return "Ra";
    case RuleId::Rb: return "Rb";
    case RuleId::Rc: return "Rc";
    case RuleId::VarietyReduce: return "VR";
    }
    return "?";
}

std::string_view label(RuleId r) {
    switch (r) {
    case RuleId::R1: return "Rule 1";
    case RuleId::R2: return "Rule 2";
    case RuleId::R3: return "Rule 3";
    case RuleId::R4: return "Rule 4";
    case RuleId::R5: return "Rule 5";
    case RuleId::Ra: return "R_a";
    case RuleId::Rb: return "R_b";
    case RuleId::Rc: return "R_c";
    case RuleId::VarietyReduce: return "Variety";
    }
    return "?";
}

std::string to_string(const Claim& c) {
    std::string s = to_string(c.lhs) + " == " + to_string(c.rhs) + " [" + std::string(name(c.rule));
    if (c.params.n) {
        s += " n=" + std::to_string(*c.params.n);
    }
    if (c.params.i) {
        s += " i=" + std::to_string(*c.params.i);
    }
    if (c.params.k) {
        s += " k=" + std::to_string(*c.params.k);
    }
    return s + "]";
}

Claim rule_one(Odd x) { return {x, act_v(x), RuleId::R1}; }

std::vector<Claim> rule_two(Odd x) {
    switch (verticality(x)) {
    case Verticality::VerticalEven:
        return {{x, act_s(x), RuleId::R2, {.k = 0}}};
    case Verticality::VerticalOdd: {
        const Odd s = act_s(x);
        return {{s, act_s(s), RuleId::R2, {.k = 1}}};
    }
    case Verticality::Neither:
        break;
    }
    return {};
}

bool rule_two_links_up(Odd x) {
    const auto [base, k] = s_chain(x);
    switch (verticality(base)) {
    case Verticality::VerticalEven: return k % 2 == 0;
    case Verticality::VerticalOdd: return k % 2 == 1;
    case Verticality::Neither: return false;
    }
    return false;
}

std::optional<Claim> rule_two_up(Odd x) {
    if (!rule_two_links_up(x)) {
        return std::nullopt;
    }
    return Claim{x, act_s(x), RuleId::R2, {.k = static_cast<unsigned>(s_chain(x).k)}};
}

Odd r_a(Odd a) {
    require_type(a, NumberType::A, "r_a");
    return Odd((checked_mul(a.value(), 2) - 1) / 3);
}

Odd r_b(Odd b) {
    require_type(b, NumberType::B, "r_b");
    return Odd(checked_affine(b.value() / 3, 16, 1));
}

Odd r_c(Odd c) {
    require_type(c, NumberType::C, "r_c");
    return Odd((checked_mul(c.value(), 4) - 1) / 3);
}

Claim claim_r_a(Odd a) { return {a, r_a(a), RuleId::Ra}; }
Claim claim_r_b(Odd b) { return {b, r_b(b), RuleId::Rb}; }
Claim claim_r_c(Odd c) { return {c, r_c(c), RuleId::Rc}; }

std::vector<Claim> rule_three_full(Odd x, unsigned n) {
    require_non_b(x, "rule_three_full");
    if (n == 0) {
        throw DomainError("rule_three_full: n must be >= 1");
    }
    const Odd anchor(checked_mul(checked_pow(3, n), x.value()));
    std::vector<Claim> out;
    out.reserve(2 * n);
    for (unsigned i = 1; i <= n; ++i) {
        const Odd v(checked_affine(mixed_power(x, n, i), 4, 1));
        out.push_back({v, anchor, RuleId::R3, {.n = n, .i = i}});
        out.push_back({act_s(v), anchor, RuleId::R3, {.n = n, .i = i}});
    }
    return out;
}

std::vector<Claim> rule_four_full(Odd x, unsigned n) {
    require_non_b(x, "rule_four_full");
    if (n == 0) {
        throw DomainError("rule_four_full: n must be >= 1");
    }
    const Odd anchor = act_s(Odd(checked_mul(checked_pow(3, n), x.value())));
    std::vector<Claim> out;
    out.reserve(2 * n);
    for (unsigned i = 1; i <= n; ++i) {
        const Odd s(checked_affine(mixed_power(x, n, i), 2, 1));
        out.push_back({s, anchor, RuleId::R4, {.n = n, .i = i}});
        out.push_back({act_s(s), anchor, RuleId::R4, {.n = n, .i = i}});
    }
    return out;
}

std::vector<Claim> rule_five_full(Odd x, unsigned n) {
    require_non_b(x, "rule_five_full");
    const Odd p(checked_mul(checked_pow(3, n), x.value()));
    if (rank(p) != 1) {
        throw RankViolation("rule_five_full: 3^" + std::to_string(n) + "*" + to_string(x) +
                            " has rank " + std::to_string(rank(p)));
    }
    const Odd a = act_g(p);
    std::vector<Claim> out;
    out.reserve(2 * n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        Odd y = act_g(Odd(checked_mul(checked_pow(3, n - i), x.value())));
        for (unsigned s = 0; s < i; ++s) {
            y = act_s(y);
        }
        if (i > 0) {
            out.push_back({y, a, RuleId::R5, {.n = n, .i = i}});
        }
        out.push_back({act_s(y), a, RuleId::R5, {.n = n, .i = i}});
    }
    return out;
}

std::optional<RuleFiveParams> rule_five_params(Odd a) {
    if (a.value() % 8 != 1) {
        return std::nullopt;
    }
    const u128 p = a.value() / 2 + 1;
    const auto [n, rest] = three_adic(p);
    return RuleFiveParams{Odd(rest), n};
}

Variety variety_classify(Odd g) {
    if (g.value() < 3) {
        return {};
    }
    const u128 d = g.value() - 1;
    const int m = count_trailing_zeros(d);
    const u128 b = d >> m;
    if (m % 2 == 1) {
        return {VarietyKind::S, b, static_cast<unsigned>((m - 1) / 2)};
    }
    return {VarietyKind::V, b, static_cast<unsigned>(m / 2 - 1)};
}

Claim variety_reduce(Odd g) {
    const Variety v = variety_classify(g);
    if (v.kind == VarietyKind::None || v.k == 0) {
        throw NotReducible("variety_reduce: " + to_string(g) + " has no contraction (k = 0)");
    }
    const Odd core(checked_mul(checked_pow(3, v.k), v.b));
    const Odd rhs = v.kind == VarietyKind::S ? act_s(core) : act_v(core);
    return {g, rhs, RuleId::VarietyReduce, {.k = v.k}};
}

} // namespace feather
