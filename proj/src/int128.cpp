#include "feather/int128.hpp"

#include <algorithm>
#include <stdexcept>

namespace feather {

std::string to_string(u128 v) {
    if (v == 0) {
        return "0";
    }
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer");
    }
    u128 v = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not a non-negative integer: " + std::string(text));
        }
        v = checked_affine(v, 10, static_cast<u128>(ch - '0'));
    }
    return v;
}

} // namespace feather
