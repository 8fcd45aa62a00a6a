#ifndef FEATHER_TESTS_SUPPORT_HPP
#define FEATHER_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "feather/arith.hpp"
#include "feather/rules.hpp"

namespace doctest {

template <>
struct StringMaker<unsigned __int128> {
    static String convert(unsigned __int128 v) { return feather::to_string(v).c_str(); }
};

template <>
struct StringMaker<feather::Odd> {
    static String convert(feather::Odd v) { return feather::to_string(v).c_str(); }
};

template <>
struct StringMaker<feather::Claim> {
    static String convert(const feather::Claim& c) { return feather::to_string(c).c_str(); }
};

} // namespace doctest

inline feather::Odd odd(unsigned long long v) { return feather::Odd(v); }

#endif
