#pragma once

// Inlier counting: #INL_{a,b} = #{j < a : pi(j) < b}. Brute force for any
// permutation, O(log k) for bit reversal, closed form for circular shifts,
// compositional rules for block-2D and m-stream interleavers, and the
// successive-inlier count #SINL for bit reversal.

#include <cstdint>
#include <vector>

#include "prunedperm/checked.hpp"
#include "prunedperm/perm.hpp"
#include "prunedperm/rational.hpp"

namespace pp {

// linear scan; any permutation, k <= 2^24
u64 inl_brute(const Permutation& p, u64 alpha, u64 beta);
std::vector<u64> inl_set(const Permutation& p, u64 alpha, u64 beta);  // k <= 2^16

// K_INL scaled by 4, in {0, -1, 1, 2, 3}; requires 0 < a, b < k
int k_inl_scaled4(int n, u64 alpha, u64 beta);
Rat k_inl(int n, u64 alpha, u64 beta);

// O(log k) count for the n-bit bit-reversal permutation; 0 <= a, b <= k
u64 inl_brp(int n, u64 alpha, u64 beta);

// closed form for pi(j) = (j + c) mod k; 0 <= a, b <= k
u64 inl_circular(u64 k, u64 c, u64 alpha, u64 beta);

// dispatching count: fast paths where they exist, scan otherwise
u64 inl_count(const Permutation& p, u64 alpha, u64 beta);
u64 oul_count(const Permutation& p, u64 alpha, u64 beta);  // alpha - inliers

struct BoundedQuery {
    u64 alpha1, alpha2, beta1, beta2;  // 0 <= a1 < a2 <= k, same for b
};
u64 inl_bounded(const Permutation& p, const BoundedQuery& q);
Rat prob_bounded(const Permutation& p, const BoundedQuery& q);

// successive inliers #{j in [k] : pi(j) < a, pi(j+1 mod k) < b} for BRP
u64 sinl_brp(int n, u64 alpha, u64 beta);
int k_sinl_scaled4(int n, u64 alpha, u64 beta);  // in {-4..0, 1}
u64 sinl_brute(const Permutation& p, u64 alpha, u64 beta);

// sum_j floor((j-a)/k) * floor((pi_n(j+1)-b)/k) == inl_brp(a+1, b) - 1
bool inl_successor_identity_check(int n, u64 alpha, u64 beta);

}  // namespace pp
