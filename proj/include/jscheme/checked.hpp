#pragma once

#include <cstdint>

#include "jscheme/errors.hpp"

namespace jscheme {

// All counting arithmetic goes through these helpers: the contract is
// detection of overflow, never silent wraparound.

inline long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer addition overflow");
    return out;
}

inline long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer subtraction overflow");
    return out;
}

inline long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer multiplication overflow");
    return out;
}

inline __int128 checked_add128(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit addition overflow");
    return out;
}

inline __int128 checked_sub128(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("128-bit subtraction overflow");
    return out;
}

inline __int128 checked_mul128(__int128 a, __int128 b) {
    __int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit multiplication overflow");
    return out;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace jscheme
