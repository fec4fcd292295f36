#include "prunedperm/sawsums.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "prunedperm/perm.hpp"
#include "prunedperm/rational.hpp"

namespace pp {

namespace {

i128 pow_i128(i128 b, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r = mul_ck(r, b);
    return r;
}

i128 binom(int n, int r) {
    i128 v = 1;
    for (int i = 1; i <= r; ++i) v = mul_ck(v, n - r + i) / i;
    return v;
}

void check_small(int n, int cap, const char* what) {
    if (n < 0 || n > cap) throw std::invalid_argument(std::string(what) + ": size cap exceeded");
}

u64 kof(int n) { return u64{1} << n; }

}  // namespace

i128 saw_scaled(i128 num, i128 den) {
    if (den <= 0) throw std::invalid_argument("saw_scaled: den must be positive");
    i128 m = mod_floor(num, den);
    return 2 * m - den + (m == 0 ? den : 0);
}

i128 saw2k(i128 x, i128 k) { return saw_scaled(x, k); }
i128 saw2k_half(i128 x, i128 k) {
    // 2k*saw(x/k + 1/2); note saw_scaled over denominator 2k would be 4k-scaled
    i128 m = mod_floor(2 * x + k, 2 * k);
    return m - k + (m == 0 ? k : 0);
}

i128 floor_prod_sum(i128 k, i128 p, i128 q) {
    if (k < 1) throw std::invalid_argument("floor_prod_sum: k must be positive");
    i128 pm = mod_floor(p, k), qm = mod_floor(q, k);
    i128 pf = floor_div(p, k), qf = floor_div(q, k);
    i128 r = pm < qm ? pm : qm;
    r = add_ck(r, mul_ck(mul_ck(pf, qf), k));
    r = add_ck(r, mul_ck(pf, qm));
    r = add_ck(r, mul_ck(qf, pm));
    return r;
}

// ---------------------------------------------------------------------------
// J_m(k) = sum j^m pi_n(j)

namespace {

// Faulhaber with B_1 = +1/2: sum_{j=1}^{N} j^m
Rat powsum(i128 N, int m) {
    static const std::array<Rat, 9> B = {Rat(1), Rat(1, 2), Rat(1, 6), Rat(0), Rat(-1, 30),
                                         Rat(0), Rat(1, 42), Rat(0),   Rat(-1, 30)};
    if (m < 0 || m > 8) throw std::invalid_argument("powsum: m out of range [0,8]");
    Rat acc(0);
    for (int i = 0; i <= m; ++i)
        acc = acc + Rat(binom(m + 1, i)) * B[static_cast<std::size_t>(i)] * Rat(pow_i128(N, m + 1 - i));
    return acc / Rat(m + 1);
}

// sum_{j=0}^{N} j^m under the 0^0 = 1 convention used by the binomial split
i128 powsum0(i128 N, int m) {
    Rat v = powsum(N, m) + Rat(m == 0 ? 1 : 0);
    return v.as_integer("powsum0");
}

}  // namespace

i128 J_rec(int n, int m) {
    if (m < 0 || m > 8) throw std::invalid_argument("J_rec: m out of range [0,8]");
    if (n < 0 || n > 62) throw std::invalid_argument("J_rec: n out of range");
    std::vector<i128> J(static_cast<std::size_t>(m) + 1, 0);  // values at k = 1
    for (int lvl = 1; lvl <= n; ++lvl) {
        i128 half = static_cast<i128>(1) << (lvl - 1);
        std::vector<i128> next(J.size());
        for (int mm = 0; mm <= m; ++mm) {
            i128 v = 2 * J[static_cast<std::size_t>(mm)];
            for (int r = 0; r <= mm; ++r) {
                i128 inner = add_ck(2 * J[static_cast<std::size_t>(mm - r)], powsum0(half - 1, mm - r));
                v = add_ck(v, mul_ck(mul_ck(binom(mm, r), pow_i128(half, r)), inner));
            }
            next[static_cast<std::size_t>(mm)] = v;
        }
        J = std::move(next);
    }
    return J[static_cast<std::size_t>(m)];
}

i128 J_closed(int n, int m) {
    i128 k = static_cast<i128>(1) << n;
    switch (m) {
        case 0: return exact_div(mul_ck(k, k - 1), 2, "J_0");
        case 1:
            // (2k^3 + (n-4)k^2 + 2k) / 8
            return exact_div(add_ck(add_ck(2 * pow_i128(k, 3), mul_ck(n - 4, mul_ck(k, k))), 2 * k),
                             8, "J_1");
        case 2:
            // (8k^4 - (20-6n)k^3 + 2(8-3n)k^2 - 4k) / 48
            return exact_div(add_ck(sub_ck(mul_ck(8, pow_i128(k, 4)), mul_ck(20 - 6 * n, pow_i128(k, 3))),
                                    sub_ck(mul_ck(2 * (8 - 3 * n), mul_ck(k, k)), 4 * k)),
                             48, "J_2");
        default: throw std::invalid_argument("J_closed: m must be 0, 1 or 2");
    }
}

i128 J_oracle(int n, int m) {
    check_small(n, 14, "J_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j)
        acc = add_ck(acc, mul_ck(pow_i128(static_cast<i128>(j), m), eval_brp(n, j)));
    return acc;
}

// ---------------------------------------------------------------------------
// R / S / T (scale 4k)

i128 R_closed(int n) {
    i128 k = static_cast<i128>(1) << n;
    return exact_div(mul_ck(k, n), 2, "R") - k + 1;
}

i128 S_rec(int n, u64 b, u64 c) {
    if (n <= 1) return 0;
    i128 k = static_cast<i128>(1) << n;
    i128 bm = mod_floor(static_cast<i128>(b), k);
    i128 KS = bm < k / 2 ? -2 * bm + k / 2 - 1 : 2 * bm - 3 * k / 2 + 1;
    if (c % 2 == 1) {
        i128 cs = static_cast<i128>(eval_brp(n - 1, (c - 1) / 2));
        return 2 * S_rec(n - 1, b, (c - 1) / 2) + saw2k(cs - b, k) + KS;
    }
    i128 cs = static_cast<i128>(eval_brp(n - 1, c / 2));
    return 2 * S_rec(n - 1, b, c / 2) - saw2k_half(cs - b, k) + KS;
}

i128 S_oracle(int n, u64 b, u64 c) {
    check_small(n, 14, "S_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j)
        acc += saw2k(static_cast<i128>(j) - b, k) * saw2k(static_cast<i128>(eval_brp(n, j)) - c, k);
    return exact_div(acc, static_cast<i128>(k), "S_oracle");
}

i128 T_rec(int n, u64 b, u64 c) {
    if (b == 0 || c == 0 || n <= 1) return 0;
    i128 k = static_cast<i128>(1) << n;
    if (c % 2 == 1) {
        i128 cs = static_cast<i128>(eval_brp(n - 1, (c - 1) / 2));
        return 2 * T_rec(n - 1, b, (c - 1) / 2) + saw2k(cs - b, k) - saw2k(cs, k) - saw2k_half(b, k);
    }
    i128 cs = static_cast<i128>(eval_brp(n - 1, c / 2));
    return 2 * T_rec(n - 1, b, c / 2) - saw2k_half(cs - b, k) + saw2k_half(cs, k) - saw2k_half(b, k);
}

i128 T_oracle(int n, u64 b, u64 c) {
    check_small(n, 14, "T_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j) {
        i128 pj = static_cast<i128>(eval_brp(n, j));
        i128 lhs = saw2k(static_cast<i128>(j) - b, k) - saw2k(static_cast<i128>(j), k);
        i128 rhs = saw2k(pj - c, k) - saw2k(pj, k);
        acc += lhs * rhs;
    }
    return exact_div(acc, static_cast<i128>(k), "T_oracle");
}

// ---------------------------------------------------------------------------
// U

i128 U_closed_scaled8(int n) {
    i128 k = static_cast<i128>(1) << n;
    return mul_ck(k, n - 2) + 2;
}

i128 U_oracle_scaled8(int n) {
    check_small(n, 14, "U_oracle");
    u64 k = kof(n);
    std::vector<i128> pi(k), s0(k);
    for (u64 j = 0; j < k; ++j) {
        pi[j] = static_cast<i128>(eval_brp(n, j));
        s0[j] = saw2k(static_cast<i128>(j), static_cast<i128>(k));
    }
    i128 acc = 0;
    for (u64 b = 0; b < k; ++b)
        for (u64 j = 0; j < k; ++j) {
            i128 lhs = saw2k(static_cast<i128>(j) - b, k) - s0[j];
            i128 rhs = saw2k(pi[j] - pi[b], k) - saw2k(pi[j], static_cast<i128>(k));
            acc += lhs * rhs;
        }
    // acc = 4k^2 * U, want 8U
    return exact_div(2 * acc, mul_ck(static_cast<i128>(k), static_cast<i128>(k)), "U_oracle");
}

// ---------------------------------------------------------------------------
// C / V / W (scale k^2)

i128 C_rec(int n, u64 p) {
    i128 k = static_cast<i128>(1) << n;
    if (p == 0) return exact_div(mul_ck(mul_ck(k, k - 1), k - 2), 12, "C p=0");
    if (p == kof(n) / 2) return exact_div(mul_ck(mul_ck(k, k - 2), k - 4), 12, "C p=k/2");
    int v = __builtin_ctzll(p);
    i128 u = static_cast<i128>(1) << v;
    i128 C = 0;
    i128 kp = k, pp = static_cast<i128>(p), w = 1;  // w = 8^j
    for (int j = 0; j <= n - v - 2; ++j) {
        i128 m = pp > kp - pp ? pp : kp - pp;
        C = add_ck(C, mul_ck(w, m));
        kp /= 2;
        pp = mod_floor(pp, kp);
        w = mul_ck(w, 8);
    }
    i128 tail = add_ck(sub_ck(mul_ck(2 * k - 12, mul_ck(u, u)), 5 * k), 18 * u);
    return add_ck(C, exact_div(mul_ck(mul_ck(k, k), tail), 24 * mul_ck(u, u), "C tail"));
}

i128 C_oracle(int n, u64 p) {
    check_small(n, 14, "C_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j)
        acc += saw2k(static_cast<i128>(eval_brp(n, j)), k) *
               saw2k(static_cast<i128>(eval_brp(n, (j + p) % k)), k);
    return exact_div(acc, 4, "C_oracle");
}

i128 V_rec(int n, u64 a, u64 b) {
    if (n <= 1) return 0;
    i128 k = static_cast<i128>(1) << n;
    u64 half = kof(n - 1);
    u64 ea = a % 2, eb = b % 2;
    u64 ap = a - ea, bp = b - eb;
    auto pn1 = [&](i128 x) { return static_cast<i128>(eval_brp(n - 1, static_cast<u64>(mod_floor(x, half)))); };
    i128 app = ea == 0 ? 2 * pn1(pn1(ap / 2) + 1) - static_cast<i128>(bp)
                       : -2 * pn1(pn1(ap / 2) + 1) + static_cast<i128>(bp);
    i128 bpp = eb == 0 ? 2 * pn1(pn1(bp / 2) - 1) - static_cast<i128>(ap)
                       : -2 * pn1(pn1(bp / 2) - 1) + static_cast<i128>(ap);
    int e = ea == eb ? 1 : 0;
    i128 val = mul_ck(8, V_rec(n - 1, ap / 2, bp / 2));
    i128 prod = mul_ck(saw2k(static_cast<i128>(a) + 1, k) - saw2k(static_cast<i128>(a) + 2, k),
                       saw2k(static_cast<i128>(b), k) - saw2k(static_cast<i128>(b) - 1, k));
    val = add_ck(val, exact_div(prod, 4, "V cross term"));
    val = sub_ck(val, exact_div(mul_ck(k, saw2k(app, k)), 4, "V a'' term"));
    val = sub_ck(val, exact_div(mul_ck(k, saw2k(bpp, k)), 4, "V b'' term"));
    if (e) val = add_ck(val, delta_div(bpp, k) * exact_div(mul_ck(k, k), 4, "V delta") - k / 2);
    return val;
}

i128 V_oracle(int n, u64 a, u64 b) {
    check_small(n, 14, "V_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j)
        acc += saw2k(static_cast<i128>(eval_brp(n, j)) - a, k) *
               saw2k(static_cast<i128>(eval_brp(n, (j + 1) % k)) - b, k);
    return exact_div(acc, 4, "V_oracle");
}

i128 W_rec(int n, u64 a, u64 b) {
    if (a == 0 || b == 0 || n <= 1) return 0;
    i128 k = static_cast<i128>(1) << n;
    u64 half = kof(n - 1);
    i128 ea = a % 2, eb = b % 2;
    u64 ap = a - a % 2, bp = b - b % 2;
    auto pn1 = [&](i128 x) { return static_cast<i128>(eval_brp(n - 1, static_cast<u64>(mod_floor(x, half)))); };
    i128 app = 2 * pn1(mod_floor(pn1(ap / 2) + 1, half));
    i128 bpp = 2 * pn1(mod_floor(pn1(bp / 2) - 1, half));
    i128 e = ea * eb + (1 - ea) * (1 - eb);
    i128 apw = static_cast<i128>(ap), bpw = static_cast<i128>(bp);
    i128 val = mul_ck(8, W_rec(n - 1, ap / 2, bp / 2));
    val = add_ck(val, mul_ck(2 * eb - 1, exact_div(mul_ck(k, saw2k(bpp - apw, k) - saw2k(bpp, k)), 4, "W b'' term")));
    val = add_ck(val, mul_ck(2 * ea - 1, exact_div(mul_ck(k, saw2k(app - bpw, k) - saw2k(app, k)), 4, "W a'' term")));
    val = add_ck(val, exact_div(mul_ck(k, saw2k(k / 2 - bpw, k)), 4, "W half term"));
    i128 deltas = -(1 - eb) * delta_div(k / 2 - bpw, k) + e * delta_div(app - bpw, k) -
                  delta_div(apw + 2, k) * (delta_div(bpw, k) - 1 - ea);
    val = add_ck(val, mul_ck(deltas, exact_div(mul_ck(k, k), 4, "W delta scale")));
    val = sub_ck(val, exact_div(mul_ck(apw, k), 2, "W linear term"));
    val = sub_ck(val, ea * eb * k);
    return val;
}

i128 W_oracle(int n, u64 a, u64 b) {
    check_small(n, 14, "W_oracle");
    u64 k = kof(n);
    i128 acc = 0;
    for (u64 j = 0; j < k; ++j) {
        i128 pj = static_cast<i128>(eval_brp(n, j));
        i128 pj1 = static_cast<i128>(eval_brp(n, (j + 1) % k));
        acc += (saw2k(pj - a, k) - saw2k(pj, k)) * (saw2k(pj1 - b, k) - saw2k(pj1, k));
    }
    return exact_div(acc, 4, "W_oracle");
}

// ---------------------------------------------------------------------------
// residue / squared-integer closed forms

i128 half_saw_sum_scaled4(i128 b, i128 k) {
    i128 bm = mod_floor(b, k);
    return bm < k / 2 ? 2 * bm - k / 2 + 1 : -2 * bm + 3 * k / 2 - 1;
}

i128 sq_saw_sum_scaled2(int n) {
    if (n == 0) return 0;
    if (n % 2 == 0) return 3 - (static_cast<i128>(1) << (n / 2 + 1));
    return 3 - 3 * (static_cast<i128>(1) << ((n - 1) / 2));
}

i128 sq_floor_sum(int n) {
    if (n == 0) return 0;
    i128 k = static_cast<i128>(1) << n;
    i128 base = exact_div(mul_ck(k, k) - 4, 3, "sq_floor_sum") - k;
    if (n % 2 == 0) return base + 3 * (static_cast<i128>(1) << (n / 2 - 1));
    return base + (static_cast<i128>(1) << ((n + 1) / 2));
}

}  // namespace pp
