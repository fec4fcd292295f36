#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prunedperm/perm.hpp"
#include "prunedperm/sawsums.hpp"

using namespace pp;

namespace {

i128 kof(int n) { return static_cast<i128>(1) << n; }

}  // namespace

TEST_CASE("saw scaling basics") {
    CHECK(saw_scaled(0, 4) == 0);
    CHECK(saw_scaled(1, 2) == 0);   // saw(1/2) = 0
    CHECK(saw_scaled(-1, 4) == 2);  // saw(-1/4) = 1/4
    for (i128 x = -20; x <= 20; ++x) CHECK(saw_scaled(-x, 8) == -saw_scaled(x, 8));
    CHECK_THROWS_AS(saw_scaled(1, 0), std::invalid_argument);
}

TEST_CASE("complete residue system sums vanish") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 10; ++n) {
        i128 k = kof(n);
        i128 w = static_cast<i128>(rng() % (3 * static_cast<u64>(k))) - k;
        u64 h = (rng() % static_cast<u64>(k)) | 1;
        i128 s_plain = 0, s_shift = 0, s_pi = 0, s_lcs = 0, s_pi_shift = 0;
        for (u64 j = 0; j < static_cast<u64>(k); ++j) {
            s_plain += saw2k(static_cast<i128>(j), k);
            s_shift += saw2k(static_cast<i128>(j) + w, k);
            s_pi += saw2k(static_cast<i128>(eval_brp(n, j)), k);
            s_lcs += saw2k(static_cast<i128>(j) * h, k);
            s_pi_shift += saw2k(static_cast<i128>(eval_brp(n, j)) + w, k);
        }
        CHECK(s_plain == 0);
        CHECK(s_shift == 0);
        CHECK(s_pi == 0);
        CHECK(s_lcs == 0);
        CHECK(s_pi_shift == 0);
    }
}

TEST_CASE("half-range residue sums") {
    for (int n = 2; n <= 10; ++n) {
        i128 k = kof(n);
        for (i128 b = 0; b < 2 * k; ++b) {
            i128 direct = 0, pi_plus = 0, pi_minus = 0;
            for (u64 j = 0; j < static_cast<u64>(k) / 2; ++j) {
                direct += saw2k(static_cast<i128>(j) - b, k);
                pi_plus += saw2k(static_cast<i128>(eval_brp(n, j)) + b, k);
                pi_minus += saw2k(static_cast<i128>(eval_brp(n, j)) - b, k);
            }
            // direct is 2k-scaled, the closed form is 4-scaled: 2*direct == k * closed
            CHECK(2 * direct == mul_ck(k, half_saw_sum_scaled4(b, k)));
            CHECK(pi_plus == 0);
            CHECK(pi_minus == 0);
        }
    }
}

TEST_CASE("squared-integer sums match closed forms") {
    for (int n = 0; n <= 14; ++n) {
        u64 k = u64{1} << n;
        i128 saw_acc = 0, floor_acc = 0;
        for (u64 j = 0; j < k; ++j) {
            saw_acc += saw2k(static_cast<i128>(j) * static_cast<i128>(j), static_cast<i128>(k));
            floor_acc += floor_div(static_cast<i128>(j) * static_cast<i128>(j), static_cast<i128>(k));
        }
        CHECK(saw_acc == sq_saw_sum_scaled2(n) * (static_cast<i128>(k)));
        CHECK(floor_acc == sq_floor_sum(n));
    }
}

TEST_CASE("floor product sum closed form") {
    CHECK(floor_prod_sum(8, 0, 0) == 0);
    CHECK(floor_prod_sum(8, 3, 5) == 3);
    std::mt19937_64 rng(5);
    for (i128 k : {i128(1), i128(7), i128(8), i128(32), i128(100)})
        for (int trial = 0; trial < 60; ++trial) {
            i128 p = static_cast<i128>(rng() % 400) - 200;
            i128 q = static_cast<i128>(rng() % 400) - 200;
            i128 direct = 0;
            for (i128 j = 0; j < k; ++j) direct += floor_div(j - p, k) * floor_div(j - q, k);
            CHECK(floor_prod_sum(k, p, q) == direct);
        }
}

TEST_CASE("J sums: closed forms, recursion, oracle") {
    CHECK(J_closed(3, 0) == 28);
    CHECK(J_closed(2, 1) == 13);
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 2; ++m) {
            CHECK(J_closed(n, m) == J_oracle(n, m));
            CHECK(J_rec(n, m) == J_oracle(n, m));
        }
    for (int n = 11; n <= 20; ++n)
        for (int m = 0; m <= 2; ++m) CHECK(J_closed(n, m) == J_rec(n, m));
    for (int n = 0; n <= 8; ++n)
        for (int m = 3; m <= 8; ++m) CHECK(J_rec(n, m) == J_oracle(n, m));
}

TEST_CASE("R closed form") {
    CHECK(R_closed(0) == 0);
    CHECK(R_closed(2) == 1);
    CHECK(R_closed(10) == 4097);
    for (int n = 1; n <= 10; ++n) {
        CHECK(R_closed(n) == S_oracle(n, 0, 0));
        CHECK(R_closed(n) == S_rec(n, 0, 0));
    }
}

TEST_CASE("S and T recursions vs oracles, exhaustive small") {
    for (int n = 1; n <= 6; ++n) {
        u64 k = u64{1} << n;
        for (u64 b = 0; b < k; ++b)
            for (u64 c = 0; c < k; ++c) {
                CHECK(S_rec(n, b, c) == S_oracle(n, b, c));
                CHECK(T_rec(n, b, c) == T_oracle(n, b, c));
            }
    }
}

TEST_CASE("T examples") {
    u64 a = (u64{1} << 16) - 1, b = (u64{1} << 16) + 1;
    CHECK(T_rec(32, a, b) == 4294967300);
    CHECK(T_rec(2, 1, 1) == 0);
    for (u64 c = 0; c < 16; ++c) {
        CHECK(T_rec(4, 0, c) == 0);
        CHECK(T_rec(4, c, 0) == 0);
    }
}

TEST_CASE("U closed form vs double-sum oracle") {
    CHECK(U_closed_scaled8(2) == 2);   // U(4) = 1/4
    CHECK(U_closed_scaled8(3) == 10);  // U(8) = 5/4
    for (int n = 1; n <= 8; ++n) CHECK(U_closed_scaled8(n) == U_oracle_scaled8(n));
}

TEST_CASE("C algorithm vs oracle and fixed values") {
    CHECK(C_rec(3, 0) == 28);
    CHECK(C_rec(3, 4) == 16);
    CHECK(C_rec(6, 1) == -14601);
    for (int n = 1; n <= 8; ++n) {
        u64 k = u64{1} << n;
        for (u64 p = 0; p < k; ++p) CHECK(C_rec(n, p) == C_oracle(n, p));
    }
    for (int n = 1; n <= 10; ++n) CHECK(V_rec(n, 0, 0) == C_rec(n, 1));
}

TEST_CASE("V and W recursions vs oracles, exhaustive small") {
    for (int n = 1; n <= 5; ++n) {
        u64 k = u64{1} << n;
        for (u64 a = 0; a < k; ++a)
            for (u64 b = 0; b < k; ++b) {
                CHECK(V_rec(n, a, b) == V_oracle(n, a, b));
                CHECK(W_rec(n, a, b) == W_oracle(n, a, b));
            }
    }
}

TEST_CASE("W examples") {
    u64 a = (u64{1} << 16) - 1, b = (u64{1} << 16) + 1;
    i128 k = kof(32);
    CHECK(W_rec(32, a, b) == k - mul_ck(k, k));
    for (u64 x = 0; x < 16; ++x) {
        CHECK(W_rec(4, 0, x) == 0);
        CHECK(W_rec(4, x, 0) == 0);
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    i128 big = static_cast<i128>(1) << 126;
    CHECK_THROWS_AS(mul_ck(big, 4), OverflowError);
    CHECK_THROWS_AS(add_ck(big, big), OverflowError);
    CHECK_THROWS_AS(exact_div(5, 2, "test"), ExactnessError);
}
