#pragma once

// Memory-bank modeling for parallel pruned permutation stages: bank address
// functions, contention checking, the per-window pruning-gap table, and a
// step-accurate read/write schedule simulator.

#include <cstdint>
#include <string>
#include <vector>

#include "prunedperm/perm.hpp"

namespace pp {

enum class BankMode { Msb, Lsb };

struct BankLayout {
    u64 W;  // window size, power of two
    u64 M;  // bank count, power of two; W*M == k
    BankMode mode;
};

u64 bank_of(u64 i, const BankLayout& layout);

struct ContentionResult {
    bool ok = true;
    u64 j = 0, t = 0, v = 0;  // first violating counter and bank pair
};
ContentionResult contention_check(const Permutation& p, const BankLayout& layout);

// gap(j, t): pruned positions seen by bank t up to counter j. Row starts are
// the global outlier counts #OUL_{tW,beta}; within a row the count advances
// by one whenever pi(j + tW) >= beta (j > 0).
struct GapTable {
    u64 W = 0, M = 0;
    std::vector<u64> gap;  // gap[t*W + j]
    u64 at(u64 j, u64 t) const { return gap[t * W + j]; }
};
GapTable gap_table(const Permutation& p, u64 beta, u64 W, u64 M);

struct ScheduleEntry {
    u64 step;
    u64 bank;
    enum class Action { Read, Stall, Write } action;
    u64 linear;    // counter-side address
    u64 permuted;  // image-side address
};

struct Schedule {
    std::vector<ScheduleEntry> trace;
    std::vector<u64> stalls_per_bank;
    u64 total_stalls = 0;
    u64 read_steps = 0;          // barrier-synchronized: one step per counter value
    u64 read_steps_stalled = 0;  // pessimistic: stalls extend the critical path
    u64 write_steps = 0;         // ceil(beta / M), dense packing
};
Schedule schedule_pruned(const Permutation& p, u64 beta, const BankLayout& layout);

std::string schedule_csv(const Schedule& s);

}  // namespace pp
