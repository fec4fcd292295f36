#include "prunedperm/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "prunedperm/sawsums.hpp"

namespace pp {

namespace {

i128 kof(int n) { return static_cast<i128>(1) << n; }

void check_scan_size(const Permutation& p, u64 cap, const char* what) {
    if (p.size() > cap) throw std::invalid_argument(std::string(what) + ": size cap exceeded");
}

}  // namespace

DescentStats descent_stats_brp(int n) {
    i128 k = kof(n);
    i128 maj = exact_div(mul_ck(k, k), 4, "major index");
    return {k / 2, maj, k / 2 - 1, maj - (k - 1)};
}

DescentStats descent_stats_scan(const Permutation& p) {
    check_scan_size(p, u64{1} << 22, "descent_stats_scan");
    u64 k = p.size();
    DescentStats d{0, 0, 0, 0};
    u64 prev = p(0), first = prev;
    for (u64 j = 0; j + 1 < k; ++j) {
        u64 next = p(j + 1);
        if (prev > next) {
            ++d.linear_descents;
            d.linear_major += static_cast<i128>(j);
        }
        prev = next;
    }
    d.cyclic_descents = d.linear_descents;
    d.cyclic_major = d.linear_major;
    if (prev > first) {  // wraparound pair (k-1, 0)
        ++d.cyclic_descents;
        d.cyclic_major += static_cast<i128>(k) - 1;
    }
    return d;
}

PointStats point_stats_brp(int n) {
    i128 k = kof(n);
    i128 s = static_cast<i128>(1) << (n / 2);        // 2^floor(n/2)
    i128 fp = static_cast<i128>(1) << ((n + 1) / 2); // 2^ceil(n/2)
    PointStats r{};
    r.fixed_points = fp;
    r.excedances = exact_div(k - fp, 2, "#EXC");
    r.descedances = r.excedances;
    if (n % 2 == 0) {
        r.f1 = exact_div(mul_ck(s, k - 1), 2, "F1");
        r.f2 = exact_div(mul_ck(s, add_ck(mul_ck(8, mul_ck(k, k)), mul_ck(3, mul_ck(k, n - 4)) + 4)),
                         24, "F2");
        r.e1 = exact_div(mul_ck(8, mul_ck(k, k)) - 8 * k - mul_ck(12, mul_ck(s, k - 1)) +
                             mul_ck(3, mul_ck(k, n)),
                         48, "E1");
        r.e2 = exact_div(mul_ck(4, mul_ck(k, mul_ck(k, k))) - mul_ck(8, mul_ck(mul_ck(k, k), s)) +
                             mul_ck(mul_ck(k, k), 3 * n - 4) - mul_ck(3, mul_ck(mul_ck(k, s), n - 4)) -
                             mul_ck(3, mul_ck(k, n)) - 4 * s,
                         48, "E2");
        r.d1 = exact_div(mul_ck(16, mul_ck(k, k)) - 16 * k - mul_ck(12, mul_ck(s, k - 1)) -
                             mul_ck(3, mul_ck(k, n)),
                         48, "D1");
    } else {
        r.f1 = mul_ck(s, k - 1);
        r.f2 = exact_div(mul_ck(8, mul_ck(mul_ck(k, k), s)) + mul_ck(3, mul_ck(mul_ck(k, s), n - 5)) +
                             4 * s,
                         12, "F2");
        r.e1 = exact_div(mul_ck(8, mul_ck(k, k)) - 4 * k - mul_ck(24, mul_ck(s, k - 1)) +
                             mul_ck(3, mul_ck(k, n - 1)),
                         48, "E1");
        r.e2 = exact_div(mul_ck(4, mul_ck(k, mul_ck(k, k))) - mul_ck(16, mul_ck(mul_ck(k, k), s)) +
                             mul_ck(3, mul_ck(mul_ck(k, k), n - 1)) - mul_ck(6, mul_ck(mul_ck(k, s), n - 5)) -
                             mul_ck(k, 3 * n + 1) - 8 * s,
                         48, "E2");
        r.d1 = exact_div(mul_ck(16, mul_ck(k, k)) - 20 * k - mul_ck(24, mul_ck(s, k - 1)) -
                             mul_ck(3, mul_ck(k, n - 1)),
                         48, "D1");
    }
    // sum of squared indices over all j, minus excedance and fixed-point parts
    i128 sq_all = exact_div(mul_ck(mul_ck(k - 1, k), 2 * k - 1), 6, "sum j^2");
    r.d2 = sq_all - r.e2 - r.f2;
    return r;
}

PointStats point_stats_scan(const Permutation& p) {
    check_scan_size(p, u64{1} << 22, "point_stats_scan");
    u64 k = p.size();
    PointStats r{};
    for (u64 j = 0; j < k; ++j) {
        u64 y = p(j);
        i128 jj = static_cast<i128>(j);
        if (y == j) { ++r.fixed_points; r.f1 += jj; r.f2 += jj * jj; }
        else if (y > j) { ++r.excedances; r.e1 += jj; r.e2 += jj * jj; }
        else { ++r.descedances; r.d1 += jj; r.d2 += jj * jj; }
    }
    return r;
}

i128 inversions_brp(int n) {
    i128 k = kof(n);
    return exact_div(mul_ck(k, k), 4, "#INV") - exact_div(mul_ck(n + 1, k), 4, "#INV");
}

i128 inversions_circular(u64 k, u64 c) {
    c %= k;
    return mul_ck(static_cast<i128>(c), static_cast<i128>(k - c));
}

i128 inversions_scan(const Permutation& p) {
    check_scan_size(p, u64{1} << 22, "inversions_scan");
    u64 k = p.size();
    std::vector<u64> fenwick(k + 1, 0);
    i128 inv = 0;
    for (u64 j = 0; j < k; ++j) {
        u64 y = p(j);
        // count earlier values greater than y
        u64 less_eq = 0;
        for (u64 i = y + 1; i > 0; i -= i & (~i + 1)) less_eq += fenwick[i];
        inv += static_cast<i128>(j - less_eq);
        for (u64 i = y + 1; i <= k; i += i & (~i + 1)) ++fenwick[i];
    }
    return inv;
}

i128 spread_min_brp(int n, u64 alpha) {
    if (alpha < 2) throw std::invalid_argument("spread requires alpha >= 2");
    if (n < 3) throw std::invalid_argument("closed-form spread requires k >= 8");
    i128 k = kof(n);
    if (alpha == 2) return k / 4 + 1;
    if (alpha == 3) return k / 8 + 2;
    return std::min<i128>(6, k / 8 + 2);
}

i128 spread_min_scan(const Permutation& p, u64 alpha) {
    if (alpha < 2) throw std::invalid_argument("spread requires alpha >= 2");
    check_scan_size(p, u64{1} << 16, "spread_min_scan");
    u64 k = p.size();
    i128 best = 2 * static_cast<i128>(k);
    for (u64 i = 0; i < k; ++i) {
        u64 yi = p(i);
        for (u64 j = i + 1; j < k && j - i < alpha; ++j) {
            u64 yj = p(j);
            i128 s = static_cast<i128>(yi > yj ? yi - yj : yj - yi) + static_cast<i128>(j - i);
            best = std::min(best, s);
        }
    }
    return best;
}

Rat variance_uniform(u64 k) {
    i128 kk = static_cast<i128>(k);
    return Rat(mul_ck(kk, kk) - 1, 12);
}

Rat covariance_brp(int n, u64 p) {
    if (p == 0 || p >= (u64{1} << n)) throw std::invalid_argument("covariance shift out of range");
    i128 k = kof(n);
    int v = __builtin_ctzll(p);
    Rat cov = Rat(C_rec(n, p), k) + Rat(1, 4) +
              Rat(k, 2) * (Rat(1) - Rat(3, static_cast<i128>(1) << (v + 1)));
    return cov;
}

Rat covariance_scan(const Permutation& p, u64 shift) {
    check_scan_size(p, u64{1} << 16, "covariance_scan");
    u64 k = p.size();
    i128 acc = 0;  // sum of (2 pi(j) - (k-1)) (2 pi(j+p) - (k-1))
    for (u64 j = 0; j < k; ++j) {
        i128 a = 2 * static_cast<i128>(p(j)) - (static_cast<i128>(k) - 1);
        i128 b = 2 * static_cast<i128>(p((j + shift) % k)) - (static_cast<i128>(k) - 1);
        acc += a * b;
    }
    return Rat(acc, 4 * static_cast<i128>(k));
}

Rat theta_brp(int n, u64 p) { return covariance_brp(n, p) / variance_uniform(u64{1} << n); }

Rat theta1_closed(int n) {
    i128 k = kof(n);
    return Rat(-(mul_ck(5, mul_ck(k, k)) + 5 * k + 12), mul_ck(7, mul_ck(k, k + 1)));
}

StatsReport stats_report(const Permutation& p) {
    StatsReport r{};
    r.k = p.size();
    if (p.kind() == Permutation::Kind::Brp) {
        int n = p.brp_bits();
        r.descents = descent_stats_brp(n);
        r.points = point_stats_brp(n);
        r.inversions = inversions_brp(n);
        r.min_spread2 = n >= 3 ? spread_min_brp(n, 2) : spread_min_scan(p, 2);
        r.variance = variance_uniform(r.k);
        r.covariance1 = covariance_brp(n, 1);
        r.theta1 = theta_brp(n, 1);
        return r;
    }
    r.descents = descent_stats_scan(p);
    r.points = point_stats_scan(p);
    r.inversions = p.kind() == Permutation::Kind::Circular
                       ? inversions_circular(r.k, p.shift())
                       : inversions_scan(p);
    r.min_spread2 = spread_min_scan(p, 2);
    r.variance = variance_uniform(r.k);
    r.covariance1 = covariance_scan(p, 1);
    r.theta1 = r.covariance1 / r.variance;
    return r;
}

}  // namespace pp
