#ifndef FEATHER_ARITH_HPP
#define FEATHER_ARITH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feather/int128.hpp"

namespace feather {

/// A positive odd integer. Construction validates; everything downstream may
/// assume value() >= 1 and value() is odd.
class Odd {
public:
    explicit Odd(u128 v) : value_(v) {
        if (v == 0 || (v & 1) == 0) {
            throw DomainError("not a positive odd integer: " + to_string(v));
        }
    }

    [[nodiscard]] u128 value() const noexcept { return value_; }

    friend auto operator<=>(const Odd&, const Odd&) = default;

private:
    u128 value_;
};

std::string to_string(Odd x);

enum class Action { G, S, V };
enum class NumberType { A, B, C };
enum class Verticality { VerticalEven, VerticalOdd, Neither };

std::string_view name(Action a);
std::string_view name(NumberType t);
std::string_view name(Verticality v);

// G(a) = 2a - 1, S(a) = 2a + 1, V(a) = 4a + 1 = G(S(a)).
Odd apply_action(Action action, Odd x);
inline Odd act_g(Odd x) { return apply_action(Action::G, x); }
inline Odd act_s(Odd x) { return apply_action(Action::S, x); }
inline Odd act_v(Odd x) { return apply_action(Action::V, x); }

/// Preimage under the action when it is a positive odd integer.
std::optional<Odd> invert_action(Action action, Odd y);

/// Residue mod 3: 2 -> A, 0 -> B, 1 -> C.
NumberType classify_type(Odd x);

/// Number of trailing 1-bits.
int rank(Odd x);

/// 1 mod 8 (and >= 9) is vertical even, 5 mod 8 is vertical odd. 1 is Neither.
Verticality verticality(Odd x);

/// Rank-1 root of x under S^-1: x = S^k(base) with k = rank(x) - 1.
struct SChain {
    Odd base;
    int k;
};
SChain s_chain(Odd x);

/// Largest n with 3^n | v, and v / 3^n. v must be nonzero.
struct ThreeAdic {
    unsigned n;
    u128 rest;
};
ThreeAdic three_adic(u128 v);

/// Next odd number of the forward Collatz orbit: (3x+1) / 2^k, k maximal.
Odd syr(Odd x);

inline constexpr std::size_t kDefaultStepBound = 10'000;

struct Orbit {
    Odd start;
    std::vector<u128> elements;  // elements[0] == start
    bool truncated = false;
};

/// Iterates syr until 1 or until step_bound syr steps have been taken.
Orbit orbit(Odd x, std::size_t step_bound = kDefaultStepBound);

enum class Verdict { Confirmed, Unconfirmed };

struct OracleResult {
    Verdict verdict;
    bool bound_hit = false;  // at least one orbit was truncated
};

/// Brute-force equivalence: the two orbits (starts included) share an element.
OracleResult equivalent_oracle(Odd a, Odd b,
                               std::size_t step_bound = kDefaultStepBound);

/// Syr^(rank(a)-1)(a) via (a+1)(3/2)^(rank-1) - 1.
Odd ascend(Odd a);

} // namespace feather

#endif // FEATHER_ARITH_HPP
