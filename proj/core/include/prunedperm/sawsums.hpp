#pragma once

// Exact-integer sawtooth/floor summations. Every sum is returned at its
// natural integer scale (4k for R/S/T, k^2 for C/V/W, 8 for U, 1 for J);
// callers descale with exact_div so no rounding can sneak in. Each fast
// recursion has a direct-summation oracle next to it.

#include <cstdint>

#include "prunedperm/checked.hpp"

namespace pp {

// 2*den*saw(num/den), where saw(x) = x - floor(x) - 1/2 + delta(x)/2
i128 saw_scaled(i128 num, i128 den);

// shorthand for integer x over modulus k: 2k*saw(x/k) and 2k*saw(x/k + 1/2)
i128 saw2k(i128 x, i128 k);
i128 saw2k_half(i128 x, i128 k);

// sum_{j<k} floor((j-p)/k) * floor((j-q)/k), closed form
i128 floor_prod_sum(i128 k, i128 p, i128 q);

// J_m(k) = sum_{j<k} j^m * pi_n(j)
i128 J_closed(int n, int m);  // m in {0,1,2}
i128 J_rec(int n, int m);     // m <= 8, Bernoulli power sums
i128 J_oracle(int n, int m);  // direct summation, k <= 2^14

// R(k) = 4k * sum_j saw(j/k) saw(pi_n(j)/k) = k*n/2 - k + 1
i128 R_closed(int n);

// scale 4k
i128 S_rec(int n, u64 b, u64 c);
i128 S_oracle(int n, u64 b, u64 c);
i128 T_rec(int n, u64 b, u64 c);
i128 T_oracle(int n, u64 b, u64 c);

// U(k) scaled by 8: k(n-2) + 2; oracle is the O(k^2) double sum (also x8)
i128 U_closed_scaled8(int n);
i128 U_oracle_scaled8(int n);  // k <= 2^8 per contract, enforced loosely

// scale k^2
i128 C_rec(int n, u64 p);
i128 C_oracle(int n, u64 p);
i128 V_rec(int n, u64 a, u64 b);
i128 V_oracle(int n, u64 a, u64 b);
i128 W_rec(int n, u64 a, u64 b);
i128 W_oracle(int n, u64 a, u64 b);

// half-range residue sum: 4 * sum_{j<k/2} saw((j-b)/k), closed form
i128 half_saw_sum_scaled4(i128 b, i128 k);

// squared-integer sums over a full residue system (n >= 2 for the odd form):
// 2 * sum_j saw(j^2/k), and sum_j floor(j^2/k)
i128 sq_saw_sum_scaled2(int n);
i128 sq_floor_sum(int n);

}  // namespace pp
