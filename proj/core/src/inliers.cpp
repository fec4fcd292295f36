#include "prunedperm/inliers.hpp"

#include <algorithm>
#include <stdexcept>

#include "prunedperm/sawsums.hpp"

namespace pp {

namespace {

void clamp_query(u64 k, u64& alpha, u64& beta) {
    alpha = std::min(alpha, k);
    beta = std::min(beta, k);
}

}  // namespace

u64 inl_brute(const Permutation& p, u64 alpha, u64 beta) {
    clamp_query(p.size(), alpha, beta);
    u64 count = 0;
    for (u64 j = 0; j < alpha; ++j)
        if (p(j) < beta) ++count;
    return count;
}

std::vector<u64> inl_set(const Permutation& p, u64 alpha, u64 beta) {
    if (p.size() > (u64{1} << 16)) throw std::invalid_argument("inl_set: size cap exceeded");
    clamp_query(p.size(), alpha, beta);
    std::vector<u64> set;
    for (u64 j = 0; j < alpha; ++j)
        if (p(j) < beta) set.push_back(j);
    return set;
}

int k_inl_scaled4(int n, u64 alpha, u64 beta) {
    if (alpha == 0 || beta == 0) return 0;
    u64 pa = eval_brp(n, alpha), pb = eval_brp(n, beta);
    if (pa == beta) return 2;
    if (pa > beta && pb > alpha) return 3;
    if (pa < beta && pb < alpha) return -1;
    return 1;
}

Rat k_inl(int n, u64 alpha, u64 beta) { return Rat(k_inl_scaled4(n, alpha, beta), 4); }

u64 inl_brp(int n, u64 alpha, u64 beta) {
    u64 k = u64{1} << n;
    clamp_query(k, alpha, beta);
    if (alpha == 0 || beta == 0) return 0;
    if (alpha == k) return beta;
    if (beta == k) return alpha;
    i128 num = mul_ck(4, mul_ck(static_cast<i128>(alpha), static_cast<i128>(beta)));
    num = add_ck(num, T_rec(n, alpha, beta));
    num = add_ck(num, mul_ck(static_cast<i128>(k), k_inl_scaled4(n, alpha, beta)));
    return static_cast<u64>(exact_div(num, 4 * static_cast<i128>(k), "inl_brp"));
}

u64 inl_circular(u64 k, u64 c, u64 alpha, u64 beta) {
    clamp_query(k, alpha, beta);
    if (alpha == 0 || beta == 0) return 0;
    i128 bc = static_cast<i128>(beta) - static_cast<i128>(c);
    i128 r = std::min<i128>(alpha, mod_floor(bc, k));
    r += static_cast<i128>(alpha) * floor_div(bc, k);
    r -= std::min<i128>(alpha, k - c);
    r += alpha;
    return static_cast<u64>(r);
}

u64 inl_count(const Permutation& p, u64 alpha, u64 beta) {
    u64 k = p.size();
    clamp_query(k, alpha, beta);
    if (alpha == 0 || beta == 0) return 0;
    switch (p.kind()) {
        case Permutation::Kind::Brp:
            return inl_brp(p.brp_bits(), alpha, beta);
        case Permutation::Kind::Circular:
            return inl_circular(k, p.shift(), alpha, beta);
        case Permutation::Kind::Flip:
            // pi = k-1-sigma maps {pi < beta} to {sigma >= k-beta}
            return alpha - inl_count(p.inner(), alpha, k - beta);
        case Permutation::Kind::Block2D: {
            const Permutation& s1 = p.component(0);
            const Permutation& s2 = p.component(1);
            u64 k1 = s1.size(), k2 = s2.size();
            u64 a1 = alpha / k2, a2 = alpha % k2;
            u64 b1 = beta / k1, b2 = beta % k1;
            u64 r = mul_ck_u64(a1, b1);
            r += inl_count(s2, a2, b1);
            r += inl_count(s1, a1, b2);
            if (a2 > 0 && b2 > 0 && s1(a1) < b2 && s2.inverse(b1) < a2) ++r;
            return r;
        }
        case Permutation::Kind::MStream: {
            u64 m = p.component_count();
            const auto& omega = p.omega();
            u64 r = 0;
            for (u64 j = 0; j < m; ++j) {
                i128 aj = floor_div(static_cast<i128>(alpha) - static_cast<i128>(j) - 1,
                                    static_cast<i128>(m)) + 1;
                i128 bj = floor_div(static_cast<i128>(beta) - static_cast<i128>(omega[j]) - 1,
                                    static_cast<i128>(m)) + 1;
                if (aj > 0 && bj > 0)
                    r += inl_count(p.component(omega[j]), static_cast<u64>(aj), static_cast<u64>(bj));
            }
            return r;
        }
        default:
            return inl_brute(p, alpha, beta);
    }
}

u64 oul_count(const Permutation& p, u64 alpha, u64 beta) {
    alpha = std::min(alpha, p.size());
    return alpha - inl_count(p, alpha, beta);
}

u64 inl_bounded(const Permutation& p, const BoundedQuery& q) {
    if (q.alpha1 >= q.alpha2 || q.beta1 >= q.beta2 || q.alpha2 > p.size() || q.beta2 > p.size())
        throw std::invalid_argument("inl_bounded: malformed region");
    u64 r = inl_count(p, q.alpha2, q.beta2) + inl_count(p, q.alpha1, q.beta1);
    return r - inl_count(p, q.alpha2, q.beta1) - inl_count(p, q.alpha1, q.beta2);
}

Rat prob_bounded(const Permutation& p, const BoundedQuery& q) {
    return Rat(inl_bounded(p, q), static_cast<i128>(p.size()));
}

int k_sinl_scaled4(int n, u64 alpha, u64 beta) {
    i128 k = static_cast<i128>(1) << n;
    u64 ku = u64{1} << n;
    i128 ap = static_cast<i128>(eval_brp(n, (eval_brp(n, alpha) + 1) % ku));
    i128 bp = static_cast<i128>(eval_brp(n, (eval_brp(n, beta) + ku - 1) % ku));
    i128 a = static_cast<i128>(alpha), b = static_cast<i128>(beta);
    i128 v = 2 * floor_div(bp - a, k) - delta_div(bp - a, k) + delta_div(a + 1, k) +
             2 * floor_div(ap - b, k) - 2 * floor_div(k / 2 - b, k) + delta_div(k / 2 - b, k);
    if (v < -4 || v > 1)
        throw ExactnessError("K_SINL outside expected value set: " + to_string(v) + "/4");
    return static_cast<int>(v);
}

u64 sinl_brp(int n, u64 alpha, u64 beta) {
    u64 k = u64{1} << n;
    clamp_query(k, alpha, beta);
    if (alpha == 0 || beta == 0) return 0;
    if (alpha <= k / 2 && beta <= k / 2) return 0;
    if (alpha == k) return beta;
    if (beta == k) return alpha;
    i128 num = mul_ck(4, mul_ck(static_cast<i128>(alpha), static_cast<i128>(beta)));
    num = add_ck(num, exact_div(mul_ck(4, W_rec(n, alpha, beta)), static_cast<i128>(k), "sinl W/k"));
    num = add_ck(num, mul_ck(static_cast<i128>(k), k_sinl_scaled4(n, alpha, beta)));
    return static_cast<u64>(exact_div(num, 4 * static_cast<i128>(k), "sinl_brp"));
}

u64 sinl_brute(const Permutation& p, u64 alpha, u64 beta) {
    u64 k = p.size();
    clamp_query(k, alpha, beta);
    u64 count = 0;
    for (u64 j = 0; j < k; ++j)
        if (p(j) < alpha && p((j + 1) % k) < beta) ++count;
    return count;
}

bool inl_successor_identity_check(int n, u64 alpha, u64 beta) {
    if (alpha == 0 || beta == 0) throw std::invalid_argument("identity requires alpha, beta != 0");
    u64 k = u64{1} << n;
    i128 lhs = 0;
    for (u64 j = 0; j < k; ++j) {
        i128 pj1 = static_cast<i128>(eval_brp(n, (j + 1) % k));
        lhs += floor_div(static_cast<i128>(j) - static_cast<i128>(alpha), k) *
               floor_div(pj1 - static_cast<i128>(beta), k);
    }
    return lhs == static_cast<i128>(inl_brp(n, alpha + 1, beta)) - 1;
}

}  // namespace pp
