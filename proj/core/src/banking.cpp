#include "prunedperm/banking.hpp"

#include <algorithm>
#include <stdexcept>

#include "prunedperm/inliers.hpp"
#include "prunedperm/pruning.hpp"

namespace pp {

namespace {

void check_layout(const Permutation& p, const BankLayout& layout) {
    if (layout.W == 0 || layout.M == 0 || (layout.W & (layout.W - 1)) || (layout.M & (layout.M - 1)))
        throw std::invalid_argument("bank layout sizes must be powers of two");
    if (mul_ck_u64(layout.W, layout.M) != p.size())
        throw std::invalid_argument("bank layout must tile the permutation: W*M != k");
}

}  // namespace

u64 bank_of(u64 i, const BankLayout& layout) {
    return layout.mode == BankMode::Msb ? i / layout.W : i % layout.M;
}

ContentionResult contention_check(const Permutation& p, const BankLayout& layout) {
    check_layout(p, layout);
    std::vector<u64> seen(layout.M);
    for (u64 j = 0; j < layout.W; ++j) {
        std::fill(seen.begin(), seen.end(), layout.M);
        for (u64 t = 0; t < layout.M; ++t) {
            u64 bank = bank_of(p(j + t * layout.W), layout);
            if (seen[bank] != layout.M) return {false, j, seen[bank], t};
            seen[bank] = t;
        }
    }
    return {};
}

GapTable gap_table(const Permutation& p, u64 beta, u64 W, u64 M) {
    if (beta > p.size()) throw std::invalid_argument("gap_table: beta > k");
    if (mul_ck_u64(W, M) != p.size()) throw std::invalid_argument("gap_table: W*M != k");
    GapTable g{W, M, std::vector<u64>(W * M), };
    for (u64 t = 0; t < M; ++t) {
        g.gap[t * W] = oul_count(p, t * W, beta);
        for (u64 j = 1; j < W; ++j)
            g.gap[t * W + j] = g.gap[t * W + j - 1] + (p(j + t * W) >= beta ? 1 : 0);
    }
    return g;
}

Schedule schedule_pruned(const Permutation& p, u64 beta, const BankLayout& layout) {
    check_layout(p, layout);
    if (beta > p.size()) throw std::invalid_argument("schedule_pruned: beta > k");
    ContentionResult cf = contention_check(p, layout);
    if (!cf.ok)
        throw std::invalid_argument("schedule_pruned: mother permutation has bank contention at j=" +
                                    std::to_string(cf.j) + " between windows t=" + std::to_string(cf.t) +
                                    " and v=" + std::to_string(cf.v));
    u64 W = layout.W, M = layout.M;
    Schedule s;
    s.stalls_per_bank.assign(M, 0);
    std::vector<u64> bank_busy(M);
    // read phase: counter j broadcast to all banks; pruned slots stall
    for (u64 j = 0; j < W; ++j) {
        std::fill(bank_busy.begin(), bank_busy.end(), 0);
        for (u64 t = 0; t < M; ++t) {
            u64 addr = j + t * W;
            u64 image = p(addr);
            u64 bank = bank_of(image, layout);
            if (image >= beta) {
                // pruned slot: the reading bank t skips this counter value
                ++s.stalls_per_bank[t];
                ++s.total_stalls;
                s.trace.push_back({j, t, ScheduleEntry::Action::Stall, addr, image});
                continue;
            }
            if (bank_busy[bank]++)
                throw std::logic_error("schedule_pruned: bank double-booked in read step");
            s.trace.push_back({j, bank, ScheduleEntry::Action::Read, addr, image});
        }
    }
    s.read_steps = W;
    s.read_steps_stalled = W + *std::max_element(s.stalls_per_bank.begin(), s.stalls_per_bank.end());
    // write phase: pruned outputs packed densely, bank w mod M, address w / M
    std::vector<u64> y = beta > 0 ? spbri(p, 0, beta - 1, beta, 0).addresses : std::vector<u64>{};
    s.write_steps = (beta + M - 1) / M;
    for (u64 w = 0; w < beta; ++w)
        s.trace.push_back({s.read_steps + w / M, w % M, ScheduleEntry::Action::Write, w / M, y[w]});
    return s;
}

std::string schedule_csv(const Schedule& s) {
    std::string out = "# prunedperm-csv v1\nstep,bank,action,linear,permuted\n";
    for (const auto& e : s.trace) {
        const char* act = e.action == ScheduleEntry::Action::Read    ? "read"
                          : e.action == ScheduleEntry::Action::Stall ? "stall"
                                                                     : "write";
        out += std::to_string(e.step) + "," + std::to_string(e.bank) + "," + act + "," +
               std::to_string(e.linear) + "," + std::to_string(e.permuted) + "\n";
    }
    return out;
}

}  // namespace pp
