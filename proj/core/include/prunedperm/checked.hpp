#pragma once

// 128-bit checked integer arithmetic. Everything in this library is exact:
// overflow is an error, never a wrap, and divisions that are supposed to be
// exact are asserted to be.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pp {

using i128 = __int128;
using u64 = std::uint64_t;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ExactnessError : std::logic_error {
    explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 negates fine into unsigned
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

inline i128 add_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("i128 add overflow");
    return r;
}

inline i128 sub_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("i128 sub overflow");
    return r;
}

inline i128 mul_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("i128 mul overflow");
    return r;
}

// floor division / remainder toward -inf (C++ '/' truncates toward zero)
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i128 mod_floor(i128 a, i128 b) {
    i128 r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

// 1 if a is divisible by b (the sawtooth delta term at x = a/b), else 0
inline int delta_div(i128 a, i128 b) { return mod_floor(a, b) == 0 ? 1 : 0; }

inline u64 mul_ck_u64(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("u64 mul overflow");
    return r;
}

inline i128 exact_div(i128 a, i128 b, const char* what) {
    if (b == 0 || mod_floor(a, b) != 0)
        throw ExactnessError(std::string("inexact division in ") + what + ": " +
                             to_string(a) + " / " + to_string(b));
    return floor_div(a, b);
}

}  // namespace pp
