#pragma once

#include <cstdint>
#include <numeric>

#include "berge/errors.hpp"

namespace berge {

using i64 = std::int64_t;

// Overflow-checked 64-bit arithmetic. Sweep parameters push p into the
// 10^6..10^7 range and some intermediates (2B^2, |b|(B-1), j^2 tables) well
// beyond; everything fits comfortably in 64 bits, but any slip must abort
// rather than wrap.

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 x) {
    return checked_sub(0, x);
}

inline i64 checked_abs(i64 x) {
    return x < 0 ? checked_neg(x) : x;
}

// Euclidean remainder: result in [0, m) for m >= 1.
inline i64 mod_floor(i64 x, i64 m) {
    if (m <= 0) throw InvalidParameterError("modulus must be positive");
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd_i64(i64 x, i64 y) {
    return std::gcd(checked_abs(x), checked_abs(y));
}

inline int sign_of(i64 x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

} // namespace berge
