#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "prunedperm/perm.hpp"

inline pp::Permutation random_table_perm(pp::u64 k, std::mt19937_64& rng) {
    std::vector<pp::u64> map(k);
    std::iota(map.begin(), map.end(), pp::u64{0});
    std::shuffle(map.begin(), map.end(), rng);
    return pp::Permutation::table(std::move(map));
}

// the worked example permutation on [10] used throughout the tests
inline pp::Permutation worked_perm10() {
    return pp::Permutation::table({3, 1, 7, 2, 5, 8, 6, 4, 0, 9});
}
