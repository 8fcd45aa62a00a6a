#include "feather/arith.hpp"

#include <unordered_set>

namespace feather {

std::string to_string(Odd x) { return to_string(x.value()); }

std::string_view name(Action a) {
    switch (a) {
    case Action::G: return "G";
    case Action::S: return "S";
    case Action::V: return "V";
    }
    return "?";
}

std::string_view name(NumberType t) {
    switch (t) {
    case NumberType::A: return "A";
    case NumberType::B: return "B";
    case NumberType::C: return "C";
    }
    return "?";
}

std::string_view name(Verticality v) {
    switch (v) {
    case Verticality::VerticalEven: return "vertical_even";
    case Verticality::VerticalOdd: return "vertical_odd";
    case Verticality::Neither: return "neither";
    }
    return "?";
}

Odd apply_action(Action action, Odd x) {
    const u128 v = x.value();
    switch (action) {
    case Action::G: return Odd(checked_mul(v, 2) - 1);
    case Action::S: return Odd(checked_affine(v, 2, 1));
    case Action::V: return Odd(checked_affine(v, 4, 1));
    }
    throw DomainError("unknown action");
}

std::optional<Odd> invert_action(Action action, Odd y) {
    const u128 v = y.value();
    u128 pre = 0;
    switch (action) {
    case Action::G:
        pre = v / 2 + 1;  // (v + 1) / 2 without overflow at the top
        break;
    case Action::S:
        pre = v / 2;  // (v - 1) / 2
        break;
    case Action::V:
        if ((v - 1) % 4 != 0) {
            return std::nullopt;
        }
        pre = (v - 1) / 4;
        break;
    }
    if (pre == 0 || (pre & 1) == 0) {
        return std::nullopt;
    }
    return Odd(pre);
}

NumberType classify_type(Odd x) {
    switch (static_cast<int>(x.value() % 3)) {
    case 2: return NumberType::A;
    case 0: return NumberType::B;
    default: return NumberType::C;
    }
}

int rank(Odd x) { return count_trailing_ones(x.value()); }

Verticality verticality(Odd x) {
    const auto r = static_cast<int>(x.value() % 8);
    if (r == 5) {
        return Verticality::VerticalOdd;
    }
    if (r == 1 && x.value() >= 9) {
        return Verticality::VerticalEven;
    }
    return Verticality::Neither;
}

SChain s_chain(Odd x) {
    const int k = rank(x) - 1;
    // x = 2^k (base + 1) - 1
    const u128 base = x.value() >> k;
    return {Odd(base), k};
}

ThreeAdic three_adic(u128 v) {
    if (v == 0) {
        throw DomainError("three_adic of zero");
    }
    unsigned n = 0;
    while (v % 3 == 0) {
        v /= 3;
        ++n;
    }
    return {n, v};
}

Odd syr(Odd x) {
    u128 t = checked_affine(x.value(), 3, 1);
    t >>= count_trailing_zeros(t);
    return Odd(t);
}

Orbit orbit(Odd x, std::size_t step_bound) {
    Orbit o{x, {x.value()}, false};
    Odd cur = x;
    while (cur.value() != 1) {
        if (o.elements.size() - 1 >= step_bound) {
            o.truncated = true;
            break;
        }
        cur = syr(cur);
        o.elements.push_back(cur.value());
    }
    return o;
}

OracleResult equivalent_oracle(Odd a, Odd b, std::size_t step_bound) {
    if (a == b) {
        return {Verdict::Confirmed, false};
    }
    const Orbit oa = orbit(a, step_bound);
    const Orbit ob = orbit(b, step_bound);
    const bool hit = oa.truncated || ob.truncated;
    const auto& shorter = oa.elements.size() <= ob.elements.size() ? oa : ob;
    const auto& longer = &shorter == &oa ? ob : oa;
    std::unordered_set<u128, U128Hash> seen(shorter.elements.begin(), shorter.elements.end());
    for (u128 v : longer.elements) {
        if (seen.count(v) != 0) {
            return {Verdict::Confirmed, hit};
        }
    }
    return {Verdict::Unconfirmed, hit};
}

Odd ascend(Odd a) {
    const int n = rank(a);
    if (n == 1) {
        return a;
    }
    if (n == 128) {
        throw OverflowError("ascend: a + 1 exceeds 128 bits");
    }
    // a + 1 = 2^n q with q odd, so (a+1)(3/2)^(n-1) - 1 = 2q 3^(n-1) - 1.
    const u128 q = (a.value() >> n) + 1;
    const u128 twice = checked_mul(checked_mul(q, 2), checked_pow(3, static_cast<unsigned>(n - 1)));
    return Odd(twice - 1);
}

} // namespace feather
