#pragma once

#include <cstdint>

#include "sunbranch/errors.hpp"

namespace sunbranch {

/// Exact integer type for dimensions and integer Vandermonde products.
/// All arithmetic on it goes through the checked helpers below; overflow is
/// an error, never wraparound.
using Int128 = __int128;

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticOverflowError("128-bit addition overflow");
    }
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticOverflowError("128-bit multiplication overflow");
    }
    return r;
}

inline std::int64_t checked_narrow(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN)) {
        throw ArithmeticOverflowError("value does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace sunbranch
