#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

// Counting type. Euler numbers and the peak-set products outgrow 64 bits
// well inside the range a verification run can reach, so all counts are
// carried in 128 bits and every arithmetic step is overflow-checked.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count overflow in addition");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count overflow in multiplication");
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Two's complement minimum negates to itself; digits are peeled off the
    // absolute value one at a time, so work on the negative side instead.
    std::string digits;
    int128 x = neg ? v : -v;
    while (x != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

// True when the value is exactly representable as a signed 64-bit integer.
inline bool fits_int64(int128 v) {
    return v >= static_cast<int128>(-9223372036854775807LL - 1) &&
           v <= static_cast<int128>(9223372036854775807LL);
}

}  // namespace zigzag
