#ifndef FEATHER_RULES_HPP
#define FEATHER_RULES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feather/arith.hpp"

namespace feather {

enum class RuleId { R1, R2, R3, R4, R5, Ra, Rb, Rc, VarietyReduce };

/// Short tag used in CSV and graph labels ("R1", "Ra", ...).
std::string_view name(RuleId r);

/// Human label used in chain listings ("Rule 5", "R_a", ...).
std::string_view label(RuleId r);

struct RuleParams {
    std::optional<unsigned> n;
    std::optional<unsigned> i;
    std::optional<unsigned> k;

    friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

/// lhs and rhs are asserted to share a number in their Collatz orbits.
/// Claims are undirected; the oracle decides whether they hold.
struct Claim {
    Odd lhs;
    Odd rhs;
    RuleId rule;
    RuleParams params{};

    friend bool operator==(const Claim&, const Claim&) = default;
};

std::string to_string(const Claim& c);

// x == V(x).
Claim rule_one(Odd x);

// Verticality-conditioned form: vertical even x gives x == S(x), vertical odd
// x gives S(x) == S^2(x), anything else gives nothing.
std::vector<Claim> rule_two(Odd x);

/// True when (x, S(x)) is an edge of the generalized family: x = S^k(base)
/// with base vertical even and k even, or base vertical odd and k odd.
bool rule_two_links_up(Odd x);

/// x == S(x) when rule_two_links_up(x).
std::optional<Claim> rule_two_up(Odd x);

// Simplified per-type actions. Each throws TypeMismatch outside its type.
Odd r_a(Odd a);  // (2a - 1) / 3, type A
Odd r_b(Odd b);  // 16b / 3 + 1,  type B
Odd r_c(Odd c);  // (4c - 1) / 3, type C

Claim claim_r_a(Odd a);
Claim claim_r_b(Odd b);
Claim claim_r_c(Odd c);

/// For i = 1..n: V(4^i 3^(n-i) x) == 3^n x and S(V(4^i 3^(n-i) x)) == 3^n x.
/// x must not be type B; n >= 1.
std::vector<Claim> rule_three_full(Odd x, unsigned n);

/// For i = 1..n: S(4^i 3^(n-i) x) == S(3^n x) and S^2(4^i 3^(n-i) x) == S(3^n x).
std::vector<Claim> rule_four_full(Odd x, unsigned n);

/// With a = G(3^n x) and 3^n x of rank 1: S^i(G(3^(n-i) x)) == a and
/// S^(i+1)(G(3^(n-i) x)) == a for i = 0..n. The trivial a == a at i = 0 is
/// omitted, so the result has 2n + 1 claims.
/// Throws TypeMismatch if x is type B, RankViolation if rank(3^n x) != 1.
std::vector<Claim> rule_five_full(Odd x, unsigned n);

struct RuleFiveParams {
    Odd x;
    unsigned n;
};

/// Recovers (x, n) with a = G(3^n x), x not divisible by 3 and 3^n x of rank 1.
/// Absent when a is not of that shape (exactly when a mod 8 != 1).
std::optional<RuleFiveParams> rule_five_params(Odd a);

enum class VarietyKind { S, V, None };

/// g - 1 = 2^(2k+1) b gives Variety S; g - 1 = 4^(k+1) b gives Variety V.
struct Variety {
    VarietyKind kind = VarietyKind::None;
    u128 b = 0;
    unsigned k = 0;

    friend bool operator==(const Variety&, const Variety&) = default;
};

Variety variety_classify(Odd g);

/// Variety S(b, k) gives g == S(3^k b); Variety V(b, k) gives g == V(3^k b).
/// Throws NotReducible when k == 0 or g is not a variety number.
Claim variety_reduce(Odd g);

} // namespace feather

#endif // FEATHER_RULES_HPP
