#pragma once

// Minimal exact rational on checked 128-bit integers. Used where quantities
// are genuinely fractional (K constants, theta_p, U(k)); all the big sums
// stay in scaled integers.

#include <numeric>
#include <string>

#include "prunedperm/checked.hpp"

namespace pp {

struct Rat {
    i128 num = 0;
    i128 den = 1;  // > 0, gcd(num, den) == 1

    Rat() = default;
    Rat(i128 n) : num(n) {}
    Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw ExactnessError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num, b = den;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
    }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return Rat(add_ck(mul_ck(x.num, y.den), mul_ck(y.num, x.den)), mul_ck(x.den, y.den));
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return Rat(sub_ck(mul_ck(x.num, y.den), mul_ck(y.num, x.den)), mul_ck(x.den, y.den));
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return Rat(mul_ck(x.num, y.num), mul_ck(x.den, y.den));
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw ExactnessError("rational division by zero");
        return Rat(mul_ck(x.num, y.den), mul_ck(x.den, y.num));
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return mul_ck(x.num, y.den) < mul_ck(y.num, x.den);
    }

    bool is_integer() const { return den == 1; }
    i128 as_integer(const char* what) const {
        if (den != 1)
            throw ExactnessError(std::string("expected integer in ") + what + ": " + str());
        return num;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den);
    }
};

}  // namespace pp
