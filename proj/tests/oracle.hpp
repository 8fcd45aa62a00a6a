// Independent reference implementations used only by the tests. They work on
// plain 64-bit integers, step the full 3x+1 map one halving at a time and
// never call into the library.
#ifndef FEATHER_TESTS_ORACLE_HPP
#define FEATHER_TESTS_ORACLE_HPP

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 next_odd(u64 x) {
    u64 y = 3 * x + 1;
    while (y % 2 == 0) {
        y /= 2;
    }
    return y;
}

inline std::vector<u64> odd_orbit(u64 x) {
    std::vector<u64> out{x};
    while (x != 1) {
        x = next_odd(x);
        out.push_back(x);
    }
    return out;
}

inline bool share_element(u64 a, u64 b) {
    const auto oa = odd_orbit(a);
    const std::set<u64> sa(oa.begin(), oa.end());
    for (u64 y : odd_orbit(b)) {
        if (sa.count(y) != 0) {
            return true;
        }
    }
    return false;
}

inline int trailing_ones(u64 x) {
    int r = 0;
    while (x & 1) {
        ++r;
        x >>= 1;
    }
    return r;
}

// Last digit of the full base-3 representation.
inline int last_ternary_digit(u64 x) {
    std::vector<u64> digits;
    while (x > 0) {
        digits.push_back(x - (x / 3) * 3);
        x /= 3;
    }
    return digits.empty() ? 0 : static_cast<int>(digits.front());
}

inline u64 pow3(unsigned n) {
    u64 r = 1;
    while (n-- > 0) {
        r *= 3;
    }
    return r;
}

// Number of x in [1, limit] with x mod 24 == 17, by enumeration.
inline u64 count_17_mod_24(u64 limit) {
    u64 c = 0;
    for (u64 x = 17; x <= limit; x += 24) {
        ++c;
    }
    return c;
}

} // namespace oracle

#endif
