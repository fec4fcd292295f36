#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "prunedperm/inliers.hpp"

using namespace pp;

TEST_CASE("hand-counted fixture on the size-10 table") {
    auto p = worked_perm10();
    CHECK(inl_brute(p, 5, 7) == 4);
    CHECK(inl_set(p, 5, 7) == std::vector<u64>{0, 1, 3, 4});
    CHECK(oul_count(p, 5, 7) == 1);
    CHECK(inl_brute(p, 10, 10) == 10);
}

TEST_CASE("fast BRP count equals brute force, exhaustive small") {
    for (int n = 1; n <= 10; ++n) {
        u64 k = u64{1} << n;
        // incremental oracle: pref[b] = #{j < a : pi(j) < b}, updated as a grows
        std::vector<u64> pref(k + 1, 0);
        for (u64 a = 0; a <= k; ++a) {
            u64 mismatches = 0;
            for (u64 b = 0; b <= k; ++b)
                if (inl_brp(n, a, b) != pref[b]) ++mismatches;
            CHECK(mismatches == 0);
            if (a < k) {
                u64 v = eval_brp(n, a);
                for (u64 b = v + 1; b <= k; ++b) ++pref[b];
            }
        }
    }
}

TEST_CASE("involution symmetry and monotonicity") {
    std::mt19937_64 rng(29);
    for (int n = 2; n <= 14; ++n) {
        u64 k = u64{1} << n;
        for (int trial = 0; trial < 200; ++trial) {
            u64 a = rng() % (k + 1), b = rng() % (k + 1);
            CHECK(inl_brp(n, a, b) == inl_brp(n, b, a));
            if (a < k) CHECK(inl_brp(n, a, b) <= inl_brp(n, a + 1, b));
            if (b < k) CHECK(inl_brp(n, a, b) <= inl_brp(n, a, b + 1));
        }
    }
}

TEST_CASE("sandwich bound with small constants") {
    std::mt19937_64 rng(31);
    for (int n = 4; n <= 14; ++n) {
        u64 k = u64{1} << n;
        double worst_low = 0, worst_high = 0;
        for (int trial = 0; trial < 400; ++trial) {
            u64 a = 1 + rng() % k, b = 1 + rng() % k;
            double expectation = static_cast<double>(a) * static_cast<double>(b) / k;
            double dev = static_cast<double>(inl_brp(n, a, b)) - expectation;
            worst_low = std::min(worst_low, dev);
            worst_high = std::max(worst_high, dev);
        }
        // the deviation constants grow like O(n); n/2 + 2 is ample for these sizes
        CHECK(-worst_low <= n / 2.0 + 2.0);
        CHECK(worst_high <= n / 2.0 + 2.0);
    }
}

TEST_CASE("K_INL case table") {
    CHECK(k_inl_scaled4(5, 0, 7) == 0);
    // pi_4(1) = 8: equality case
    CHECK(k_inl_scaled4(4, 1, 8) == 2);
    CHECK(k_inl(4, 1, 8) == Rat(1, 2));
    u64 a = (u64{1} << 16) - 1, b = (u64{1} << 16) + 1;
    CHECK(k_inl_scaled4(32, a, b) == 3);
    CHECK(inl_brp(2, 1, 2) == 1);
}

TEST_CASE("circular closed form") {
    CHECK(inl_circular(32, 7, 15, 19) == 12);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        u64 k = 2 + rng() % 1023;
        u64 c = rng() % k, a = rng() % (k + 1), b = rng() % (k + 1);
        auto p = Permutation::circular(k, c);
        CHECK(inl_circular(k, c, a, b) == inl_brute(p, a, b));
        CHECK(inl_count(p, a, b) == inl_brute(p, a, b));
    }
    for (u64 a = 0; a <= 16; ++a)
        for (u64 b = 0; b <= 16; ++b) CHECK(inl_circular(16, 0, a, b) == std::min(a, b));
}

TEST_CASE("flip duality") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 10; ++n) {
        u64 k = u64{1} << n;
        auto flip = Permutation::flip(Permutation::brp(n));
        for (int trial = 0; trial < 100; ++trial) {
            u64 a = rng() % (k + 1), b = rng() % (k + 1);
            CHECK(inl_count(flip, a, b) == inl_brute(flip, a, b));
            if (a > 0 && b > 0) CHECK(inl_count(flip, a, b) == a - inl_brp(n, a, k - b));
        }
    }
}

TEST_CASE("block-2D composition") {
    auto blk = Permutation::block2d(Permutation::brp(20), Permutation::brp(12));
    u64 a = (u64{1} << 18) - 99, b = (u64{1} << 31) + (u64{1} << 19) + 133;
    CHECK(inl_count(blk, a, b) == 131056);
    CHECK(inl_count(Permutation::brp(12), 3997, 2048) == 1999);
    CHECK(inl_count(Permutation::brp(20), 63, 524421) == 33);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto s1 = random_table_perm(32, rng);
        auto s2 = random_table_perm(64, rng);
        auto p = Permutation::block2d(s1, s2);
        u64 k = p.size();
        u64 aa = rng() % (k + 1), bb = rng() % (k + 1);
        CHECK(inl_count(p, aa, bb) == inl_brute(p, aa, bb));
    }
    auto idblk = Permutation::block2d(Permutation::circular(8, 0), Permutation::circular(16, 0));
    CHECK(inl_count(idblk, 128, 128) == 128);
}

TEST_CASE("m-stream composition") {
    std::mt19937_64 rng(47);
    for (u64 m : {u64(2), u64(4)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Permutation> sig;
            std::vector<u64> omega(m);
            for (u64 i = 0; i < m; ++i) sig.push_back(random_table_perm(64, rng));
            std::iota(omega.begin(), omega.end(), u64{0});
            std::shuffle(omega.begin(), omega.end(), rng);
            auto p = Permutation::mstream(sig, omega);
            u64 k = p.size();
            u64 a = rng() % (k + 1), b = rng() % (k + 1);
            CHECK(inl_count(p, a, b) == inl_brute(p, a, b));
            CHECK(inl_count(p, k, k) == k);
        }
    }
    // two-stream on BRP halves, exhaustive moderate
    auto p2 = Permutation::mstream({Permutation::brp(5), Permutation::brp(5)}, {0, 1});
    for (u64 a = 0; a <= 64; ++a)
        for (u64 b = 0; b <= 64; ++b) CHECK(inl_count(p2, a, b) == inl_brute(p2, a, b));
}

TEST_CASE("bounded regions") {
    std::mt19937_64 rng(53);
    auto p = Permutation::brp(10);
    u64 k = p.size();
    for (int trial = 0; trial < 200; ++trial) {
        u64 a1 = rng() % k, a2 = a1 + 1 + rng() % (k - a1);
        u64 b1 = rng() % k, b2 = b1 + 1 + rng() % (k - b1);
        BoundedQuery q{a1, a2, b1, b2};
        u64 direct = 0;
        for (u64 j = a1; j < a2; ++j) {
            u64 y = p(j);
            if (y >= b1 && y < b2) ++direct;
        }
        CHECK(inl_bounded(p, q) == direct);
    }
    CHECK(prob_bounded(p, BoundedQuery{0, k, 0, k}) == Rat(1));
    CHECK_THROWS_AS(inl_bounded(p, BoundedQuery{5, 5, 0, 8}), std::invalid_argument);
}

TEST_CASE("successive inliers") {
    u64 a = (u64{1} << 16) - 1, b = (u64{1} << 16) + 1;
    CHECK(sinl_brp(32, a, b) == 0);
    std::mt19937_64 rng(59);
    for (int n = 2; n <= 8; ++n) {
        u64 k = u64{1} << n;
        auto p = Permutation::brp(n);
        for (u64 aa = 1; aa <= k; ++aa)
            for (u64 bb = 1; bb <= k; ++bb) {
                CHECK(sinl_brp(n, aa, bb) == sinl_brute(p, aa, bb));
                if (aa <= k / 2 && bb <= k / 2) CHECK(sinl_brp(n, aa, bb) == 0);
            }
    }
    for (int n = 9; n <= 12; ++n) {
        u64 k = u64{1} << n;
        auto p = Permutation::brp(n);
        for (int trial = 0; trial < 300; ++trial) {
            u64 aa = 1 + rng() % k, bb = 1 + rng() % k;
            CHECK(sinl_brp(n, aa, bb) == sinl_brute(p, aa, bb));
        }
    }
}

TEST_CASE("successor floor-sum identity") {
    CHECK(inl_successor_identity_check(4, 3, 7));
    CHECK(inl_successor_identity_check(2, 1, 1));
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 10; ++n) {
        u64 k = u64{1} << n;
        for (int trial = 0; trial < 40; ++trial)
            CHECK(inl_successor_identity_check(n, 1 + rng() % (k - 1), 1 + rng() % (k - 1)));
    }
}
