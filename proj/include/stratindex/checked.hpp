#pragma once

#include <cstdint>

#include "stratindex/errors.hpp"

namespace stratindex {

// Checked 64-bit helpers.  Desk-scale index tables fit comfortably in 64
// bits; anything larger indicates bad input and must not wrap silently.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("64-bit overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("64-bit overflow in multiplication");
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// (-1)^k for any integer k, including negative exponents.
inline std::int64_t sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace stratindex
