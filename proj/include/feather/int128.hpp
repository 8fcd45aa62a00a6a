#ifndef FEATHER_INT128_HPP
#define FEATHER_INT128_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "feather/errors.hpp"

namespace feather {

// Values live in [1, 2^128). Every operation that can leave that range throws
// OverflowError; nothing wraps.
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("128-bit overflow in addition");
    }
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("128-bit overflow in multiplication");
    }
    return r;
}

inline u128 checked_sub(u128 a, u128 b) {
    if (b > a) {
        throw OverflowError("128-bit underflow in subtraction");
    }
    return a - b;
}

/// a * m + c, checked.
inline u128 checked_affine(u128 a, u128 m, u128 c) {
    return checked_add(checked_mul(a, m), c);
}

/// b^e, checked.
inline u128 checked_pow(u128 b, unsigned e) {
    u128 r = 1;
    while (e-- > 0) {
        r = checked_mul(r, b);
    }
    return r;
}

inline int count_trailing_zeros(u128 v) {
    auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) {
        return __builtin_ctzll(lo);
    }
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

inline int count_trailing_ones(u128 v) {
    return v == kU128Max ? 128 : count_trailing_zeros(~v);
}

/// Index of the highest set bit; v must be nonzero.
inline int bit_width_minus_one(u128 v) {
    auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) {
        return 127 - __builtin_clzll(hi);
    }
    return 63 - __builtin_clzll(static_cast<std::uint64_t>(v));
}

std::string to_string(u128 v);

/// Parses a non-negative decimal integer. Throws std::invalid_argument on
/// malformed text and OverflowError when the value does not fit.
u128 parse_u128(std::string_view text);

struct U128Hash {
    std::size_t operator()(u128 v) const noexcept {
        auto lo = static_cast<std::uint64_t>(v);
        auto hi = static_cast<std::uint64_t>(v >> 64);
        // splitmix-style finalizer over both halves
        std::uint64_t h = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
        h ^= h >> 30;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 27;
        h *= 0x94D049BB133111EBULL;
        h ^= h >> 31;
        return static_cast<std::size_t>(h);
    }
};

} // namespace feather

#endif // FEATHER_INT128_HPP
