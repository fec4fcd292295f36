#pragma once

// Permutation statistics: closed forms for bit reversal, enumeration for
// everything else. Descents come in both conventions (cyclic subscripts
// mod k, and linear i <= k-2); closed forms target the cyclic one.

#include <cstdint>

#include "prunedperm/checked.hpp"
#include "prunedperm/perm.hpp"
#include "prunedperm/rational.hpp"

namespace pp {

struct DescentStats {
    i128 cyclic_descents, cyclic_major;
    i128 linear_descents, linear_major;
};

struct PointStats {
    i128 fixed_points, f1, f2;          // count, sum, sum of squares
    i128 excedances, e1, e2;            // j with pi(j) > j
    i128 descedances, d1, d2;           // j with pi(j) < j
};

DescentStats descent_stats_brp(int n);
DescentStats descent_stats_scan(const Permutation& p);

PointStats point_stats_brp(int n);
PointStats point_stats_scan(const Permutation& p);

i128 inversions_brp(int n);                 // k^2/4 - (n+1)k/4
i128 inversions_circular(u64 k, u64 c);     // c(k-c)
i128 inversions_scan(const Permutation& p); // O(k log k), k <= 2^22

// min over pairs 0 < |i-j| < alpha of |pi(i)-pi(j)| + |i-j|
i128 spread_min_brp(int n, u64 alpha);  // closed form, k >= 8
i128 spread_min_scan(const Permutation& p, u64 alpha);

Rat variance_uniform(u64 k);          // (k^2-1)/12
Rat covariance_brp(int n, u64 p);     // C(k,p)/k + 1/4 + (k/2)(1 - 3/2^(v+1))
Rat covariance_scan(const Permutation& p, u64 shift);
Rat theta_brp(int n, u64 p);          // covariance / variance
Rat theta1_closed(int n);             // -(5k^2+5k+12) / (7k(k+1))

struct StatsReport {
    u64 k;
    DescentStats descents;
    PointStats points;
    i128 inversions;
    i128 min_spread2;  // SP_2
    Rat variance;
    Rat covariance1, theta1;
};
StatsReport stats_report(const Permutation& p);  // fast paths for BRP/circular

}  // namespace pp
