#pragma once

// Serially pruned interleaving: serial reference walk, the fixed-point
// minimal-inliers gap solver, the parallel window decomposition (output
// bit-identical to serial), gap bounds / convergence diagnostics, and
// pruned-spread analysis.

#include <cstdint>
#include <vector>

#include "prunedperm/perm.hpp"

namespace pp {

struct GapTrace {
    std::vector<u64> iterates;  // gap after each fixed-point step (nondecreasing)
    bool converged = false;
    u64 final_gap = 0;
};

struct SerialResult {
    std::vector<u64> addresses;  // pi(w + gap_w) for w in [w1, w2], all < beta
    u64 final_gap = 0;
};

// serial reference: walk w = w1..w2 skipping pruned images; gap_w1 must be
// the true pruning gap at w1
SerialResult spbri(const Permutation& p, u64 w1, u64 w2, u64 beta, u64 gap_w1);

// gap at alpha: min D >= 0 with #INL_{alpha+D,beta} = alpha, found by
// iterating D <- #OUL_{alpha+D,beta}; backend dispatch via inl_count
GapTrace minimal_inliers(const Permutation& p, u64 alpha, u64 beta);

// parallel pruned interleaver over nwin windows of floor(beta/nwin)
// (+ remainder window); concatenation equals spbri(p, 0, beta-1, beta, 0)
std::vector<u64> ppbri(const Permutation& p, u64 nwin, u64 beta);

// fixed-point bounds on the gap (proof-form W_l / W_u constants)
double gap_lower_bound(int n, u64 alpha, u64 beta);
double gap_upper_bound(int n, u64 alpha, u64 beta);

struct ConvergenceReport {
    double mu;                 // theoretical rate 1 - beta/k
    double max_rate_deviation; // max |measured contraction - mu| over usable steps
    std::size_t steps_used;
};
ConvergenceReport convergence_check(const GapTrace& trace, u64 k, u64 beta);

// min over i != j < beta of |y(i)-y(j)| + |i-j| on the pruned map
u64 pruned_spread(const Permutation& p, u64 beta);
// same quantity for the unpruned permutation (beta = k)
u64 spread_min(const Permutation& p);

// analytic bound: S_min / (1+gamma+g/k)^t, t = -log(1-gamma-g/k)/log(1+gamma+g/k)
double spread_lower_bound(u64 s_min, double gamma, u64 g, u64 k);

}  // namespace pp
