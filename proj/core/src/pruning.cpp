#include "prunedperm/pruning.hpp"

#include <cmath>
#include <stdexcept>

#include "prunedperm/inliers.hpp"

namespace pp {

SerialResult spbri(const Permutation& p, u64 w1, u64 w2, u64 beta, u64 gap_w1) {
    u64 k = p.size();
    if (w1 > w2 || w2 >= beta || beta > k) throw std::invalid_argument("spbri: bad window");
    SerialResult r;
    r.addresses.reserve(w2 - w1 + 1);
    u64 gap = gap_w1;
    for (u64 w = w1; w <= w2; ++w) {
        for (;;) {
            if (w + gap >= k) throw std::invalid_argument("spbri: inconsistent starting gap");
            u64 y = p(w + gap);
            if (y < beta) { r.addresses.push_back(y); break; }
            ++gap;
        }
    }
    r.final_gap = gap;
    return r;
}

GapTrace minimal_inliers(const Permutation& p, u64 alpha, u64 beta) {
    u64 k = p.size();
    if (alpha > beta || beta > k) throw std::invalid_argument("minimal_inliers: need alpha <= beta <= k");
    GapTrace t;
    u64 gap = 0;
    for (;;) {
        u64 next = oul_count(p, alpha + gap, beta);
        t.iterates.push_back(next);
        if (next == gap) break;
        if (next < gap) throw std::logic_error("minimal_inliers: iterates decreased");
        gap = next;
    }
    t.converged = true;
    t.final_gap = gap;
    if (inl_count(p, alpha + gap, beta) != alpha)
        throw std::logic_error("minimal_inliers: fixed point is not a solution");
    // minimality: the scanned interval must end exactly on an inlier
    if (alpha >= 1 && alpha + gap <= k && p(alpha + gap - 1) >= beta)
        throw std::logic_error("minimal_inliers: fixed point not minimal");
    return t;
}

std::vector<u64> ppbri(const Permutation& p, u64 nwin, u64 beta) {
    if (nwin == 0 || nwin > beta || beta > p.size())
        throw std::invalid_argument("ppbri: need 0 < nwin <= beta <= k");
    u64 wlen = beta / nwin;
    u64 nfull = nwin + (beta % nwin > 0 ? 1 : 0);
    // seeds first (independent), then window fills (independent)
    std::vector<u64> seeds(nfull);
    for (u64 i = 0; i < nfull; ++i)
        seeds[i] = minimal_inliers(p, i * wlen, beta).final_gap;
    std::vector<u64> out;
    out.reserve(beta);
    for (u64 i = 0; i < nfull; ++i) {
        u64 w1 = i * wlen;
        u64 w2 = i + 1 < nfull ? (i + 1) * wlen - 1 : beta - 1;
        SerialResult r = spbri(p, w1, w2, beta, seeds[i]);
        out.insert(out.end(), r.addresses.begin(), r.addresses.end());
    }
    return out;
}

namespace {

double wl_const(int n) {
    double k = std::ldexp(1.0, n);
    double sign = n % 2 == 0 ? 1.0 : -1.0;
    return (11.0 - 12.0 * n) / 36.0 + sign * 4.0 / (9.0 * k) - 0.75;
}

double wu_const(int n) {
    double k = std::ldexp(1.0, n);
    if (n % 2 == 0) return 1.0 - 2.0 / std::sqrt(k) + 1.0 / k;
    return 1.0 - 1.5 * std::sqrt(2.0) / std::sqrt(k) + 1.0 / k;
}

}  // namespace

double gap_lower_bound(int n, u64 alpha, u64 beta) {
    double k = std::ldexp(1.0, n);
    double b = static_cast<double>(beta);
    return static_cast<double>(alpha) * (k / b - 1.0) + wl_const(n) * k / b;
}

double gap_upper_bound(int n, u64 alpha, u64 beta) {
    double k = std::ldexp(1.0, n);
    double b = static_cast<double>(beta);
    return static_cast<double>(alpha) * (k / b - 1.0) + wu_const(n) * k / b;
}

ConvergenceReport convergence_check(const GapTrace& trace, u64 k, u64 beta) {
    if (trace.iterates.size() < 3) throw std::invalid_argument("convergence_check: trace too short");
    ConvergenceReport r{};
    r.mu = 1.0 - static_cast<double>(beta) / static_cast<double>(k);
    double fixed = static_cast<double>(trace.final_gap);
    for (std::size_t t = 0; t + 2 < trace.iterates.size(); ++t) {
        double e0 = fixed - static_cast<double>(trace.iterates[t]);
        double e1 = fixed - static_cast<double>(trace.iterates[t + 1]);
        // integer quantization swamps the rate near the fixed point; use the
        // mid-trajectory where the error is still comfortably large
        if (e0 < 16.0 || e1 <= 0.0) continue;
        double dev = std::abs(e1 / e0 - r.mu);
        if (dev > r.max_rate_deviation) r.max_rate_deviation = dev;
        ++r.steps_used;
    }
    return r;
}

u64 pruned_spread(const Permutation& p, u64 beta) {
    if (beta < 2 || beta > p.size() || p.size() > (u64{1} << 12))
        throw std::invalid_argument("pruned_spread: size limits exceeded");
    std::vector<u64> y = spbri(p, 0, beta - 1, beta, 0).addresses;
    u64 best = 2 * p.size();
    for (u64 i = 0; i < beta; ++i)
        for (u64 j = i + 1; j < beta; ++j) {
            u64 d = (y[i] > y[j] ? y[i] - y[j] : y[j] - y[i]) + (j - i);
            if (d < best) best = d;
        }
    return best;
}

u64 spread_min(const Permutation& p) { return pruned_spread(p, p.size()); }

double spread_lower_bound(u64 s_min, double gamma, u64 g, u64 k) {
    double load = gamma + static_cast<double>(g) / static_cast<double>(k);
    if (gamma <= 0.0 || load >= 1.0)
        throw std::invalid_argument("spread_lower_bound: need 0 < gamma + g/k < 1");
    double t = -std::log(1.0 - load) / std::log(1.0 + load);
    return static_cast<double>(s_min) / std::pow(1.0 + load, t);
}

}  // namespace pp
