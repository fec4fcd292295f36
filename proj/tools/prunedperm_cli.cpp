// prunedperm command-line front end.
//
// Subcommands:
//   stats   <descriptor>                      permutation statistics report
//   prune   <descriptor> --beta B [...]       pruned addresses / gap trace
//   bench   [--family F] [--trials T] [...]   serial vs parallel pruning costs
//   banksim <descriptor> --beta B --W w --M m banked schedule trace
//
// Descriptor grammar (also in the core header):
//   brp:n=10 | circ:k=32,c=7 | lcs:k=64,h=31 | qpp:k=2048,h=63,b=128
//   flip:<desc> | block2d:s1=<desc>/s2=<desc>
//   mstream:omega=1-0/s0=<desc>/s1=<desc> | table:3,1,7,2,5,8,6,4,0,9
//
// Exit codes: 0 ok, 1 usage/parse error, 2 verification failure, 3 overflow.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prunedperm/banking.hpp"
#include "prunedperm/checked.hpp"
#include "prunedperm/inliers.hpp"
#include "prunedperm/pruning.hpp"
#include "prunedperm/stats.hpp"

using json = nlohmann::ordered_json;
using namespace pp;

namespace {

constexpr const char* kCsvHeader = "# prunedperm-csv v1\n";
volatile u64 benchmark_sink = 0;  // keeps timed work observable

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- stats ----------------------------------------------------------------

int cmd_stats(const std::string& desc, const std::string& format, const std::string& out) {
    auto p = parse_descriptor(desc);
    StatsReport r = stats_report(p);
    bool with_oracle = p.size() <= (u64{1} << 12);

    struct Row {
        const char* name;
        std::string closed, oracle;
    };
    std::vector<Row> rows;
    auto add = [&](const char* name, i128 closed, i128 oracle) {
        rows.push_back({name, to_string(closed), with_oracle ? to_string(oracle) : ""});
    };

    DescentStats ds{};
    PointStats ps{};
    i128 inv = 0, sp2 = 0;
    Rat cov1{0}, th1{0};
    if (with_oracle) {
        ds = descent_stats_scan(p);
        ps = point_stats_scan(p);
        inv = inversions_scan(p);
        sp2 = spread_min_scan(p, 2);
        cov1 = covariance_scan(p, 1);
        th1 = cov1 / variance_uniform(p.size());
    }
    add("cyclic_descents", r.descents.cyclic_descents, ds.cyclic_descents);
    add("cyclic_major", r.descents.cyclic_major, ds.cyclic_major);
    add("linear_descents", r.descents.linear_descents, ds.linear_descents);
    add("linear_major", r.descents.linear_major, ds.linear_major);
    add("fixed_points", r.points.fixed_points, ps.fixed_points);
    add("fp_sum", r.points.f1, ps.f1);
    add("fp_sum_sq", r.points.f2, ps.f2);
    add("excedances", r.points.excedances, ps.excedances);
    add("exc_sum", r.points.e1, ps.e1);
    add("exc_sum_sq", r.points.e2, ps.e2);
    add("descedances", r.points.descedances, ps.descedances);
    add("desc_sum", r.points.d1, ps.d1);
    add("desc_sum_sq", r.points.d2, ps.d2);
    add("inversions", r.inversions, inv);
    add("min_spread2", r.min_spread2, sp2);
    rows.push_back({"variance", r.variance.str(), ""});
    rows.push_back({"covariance1", r.covariance1.str(), with_oracle ? cov1.str() : ""});
    rows.push_back({"theta1", r.theta1.str(), with_oracle ? th1.str() : ""});

    std::ostringstream os;
    if (format == "json") {
        json j;
        j["descriptor"] = p.describe();
        j["k"] = r.k;
        for (const auto& row : rows) {
            j["closed"][row.name] = row.closed;
            if (with_oracle && !row.oracle.empty()) j["oracle"][row.name] = row.oracle;
        }
        os << j.dump(2) << "\n";
    } else {
        os << kCsvHeader << "metric,closed" << (with_oracle ? ",oracle" : "") << "\n";
        os << "k," << r.k << (with_oracle ? "," : "") << "\n";
        for (const auto& row : rows) {
            os << row.name << "," << row.closed;
            if (with_oracle) os << "," << row.oracle;
            os << "\n";
        }
    }
    emit(os.str(), out);
    return 0;
}

// ---- prune ----------------------------------------------------------------

int cmd_prune(const std::string& desc, u64 alpha, bool have_alpha, u64 beta, u64 nwin,
              bool verify, bool gap_only, const std::string& format, const std::string& out) {
    auto p = parse_descriptor(desc);
    u64 k = p.size();
    if (beta == 0 || beta > k) {
        std::cerr << "error: --beta must be in [1, k]\n";
        return 1;
    }

    if (gap_only) {
        if (!have_alpha) {
            std::cerr << "error: --gap-only requires --alpha\n";
            return 1;
        }
        if (alpha > beta) {
            std::cerr << "error: --alpha must not exceed --beta\n";
            return 1;
        }
        GapTrace t = minimal_inliers(p, alpha, beta);
        std::ostringstream os;
        if (format == "csv") {
            os << kCsvHeader << "iteration,gap\n";
            for (std::size_t i = 0; i < t.iterates.size(); ++i)
                os << (i + 1) << "," << t.iterates[i] << "\n";
        } else {
            json j;
            j["descriptor"] = p.describe();
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["gap"] = t.final_gap;
            j["converged"] = t.converged;
            j["iterates"] = t.iterates;
            os << j.dump(2) << "\n";
        }
        emit(os.str(), out);
        return 0;
    }

    std::vector<u64> addrs =
        nwin > 1 ? ppbri(p, nwin, beta) : spbri(p, 0, beta - 1, beta, 0).addresses;
    if (verify) {
        auto serial = spbri(p, 0, beta - 1, beta, 0).addresses;
        if (addrs != serial) {
            std::cerr << "verification FAILED: parallel output differs from serial\n";
            return 2;
        }
        std::cerr << "verification OK: " << addrs.size() << " addresses\n";
    }
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["descriptor"] = p.describe();
        j["beta"] = beta;
        j["windows"] = nwin;
        j["addresses"] = addrs;
        os << j.dump(2) << "\n";
    } else {
        os << kCsvHeader << "index,address\n";
        for (std::size_t i = 0; i < addrs.size(); ++i) os << i << "," << addrs[i] << "\n";
    }
    emit(os.str(), out);
    return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchPoint {
    std::string family;
    int n;
    u64 nwin;
};

const std::vector<std::string> kFamilies = {
    "brev1D",       "lcs1D",      "brev-brev2D", "brev-brevrev2D", "lcs-brev2D",
    "lcs-qpp2D",    "brev-brev2S", "lcs-brev2S",  "lcs-lcs2S"};

u64 odd_mult(u64 k) { return k / 2 - 1; }  // odd, coprime with a power of two

Permutation bench_perm(const std::string& family, int n) {
    if (family == "brev1D") return Permutation::brp(n);
    if (family == "lcs1D") {
        u64 k = u64{1} << n;
        return Permutation::lcs(k, odd_mult(k));
    }
    int n1 = n / 2, n2 = n - n1;
    u64 k1 = u64{1} << n1;
    if (family == "brev-brev2D")
        return Permutation::block2d(Permutation::brp(n1), Permutation::brp(n2));
    if (family == "brev-brevrev2D")
        return Permutation::block2d(Permutation::brp(n1),
                                    Permutation::flip(Permutation::brp(n2)));
    if (family == "lcs-brev2D")
        return Permutation::block2d(Permutation::lcs(k1, odd_mult(k1)), Permutation::brp(n2));
    if (family == "lcs-qpp2D") {
        // fixed 32-point quadratic second stage
        u64 ka = u64{1} << (n - 5);
        return Permutation::block2d(Permutation::lcs(ka, odd_mult(ka)),
                                    Permutation::qpp(32, 15, 2));
    }
    u64 kh = u64{1} << (n - 1);
    std::vector<u64> omega = {1, 0};
    if (family == "brev-brev2S")
        return Permutation::mstream({Permutation::brp(n - 1), Permutation::brp(n - 1)}, omega);
    if (family == "lcs-brev2S")
        return Permutation::mstream({Permutation::lcs(kh, odd_mult(kh)), Permutation::brp(n - 1)},
                                    omega);
    if (family == "lcs-lcs2S")
        return Permutation::mstream(
            {Permutation::lcs(kh, odd_mult(kh)), Permutation::lcs(kh, kh / 4 + 1)}, omega);
    throw std::invalid_argument("unknown bench family: " + family);
}

std::vector<int> bench_sizes(const std::string& family) {
    // brute-force inlier backends (lcs/qpp components) cap out at 2^16
    bool heavy = family.find("lcs") != std::string::npos || family.find("qpp") != std::string::npos;
    std::vector<int> sizes;
    for (int n = 10; n <= (heavy ? 16 : 24); n += 2) sizes.push_back(n);
    return sizes;
}

int cmd_bench(const std::string& family_arg, const std::vector<u64>& nwins, unsigned trials,
              u64 seed, const std::string& out) {
    (void)seed;  // all bench configurations are deterministic
    std::vector<std::string> families;
    if (family_arg == "all")
        families = kFamilies;
    else if (std::find(kFamilies.begin(), kFamilies.end(), family_arg) != kFamilies.end())
        families.push_back(family_arg);
    else {
        std::cerr << "error: unknown family '" << family_arg << "'\n";
        return 1;
    }

    std::ostringstream os;
    os << kCsvHeader
       << "family,n,p,serial_evals,parallel_evals,serial_ms,parallel_ms,speedup_evals\n";
    for (const auto& fam : families) {
        for (int n : bench_sizes(fam)) {
            auto p = bench_perm(fam, n);
            u64 k = p.size();
            u64 beta = 3 * (k / 4);
            for (u64 nwin : nwins) {
                if (nwin == 0 || nwin > beta) continue;
                // outputs must agree before any cost is recorded
                auto serial_ref = spbri(p, 0, beta - 1, beta, 0).addresses;
                if (ppbri(p, nwin, beta) != serial_ref) {
                    std::cerr << "verification FAILED: " << fam << " n=" << n << " p=" << nwin
                              << "\n";
                    return 2;
                }
                u64 wlen = beta / nwin;
                for (unsigned trial = 0; trial < trials; ++trial) {
                    // serial cost: the full scan that discovers every window gap
                    reset_perm_eval_count();
                    auto t0 = std::chrono::steady_clock::now();
                    auto serial = spbri(p, 0, beta - 1, beta, 0);
                    double serial_ms = ms_since(t0);
                    u64 serial_evals = perm_eval_count();
                    benchmark_sink += serial.final_gap;

                    // parallel cost: seeding the window-start gaps by fixed point
                    reset_perm_eval_count();
                    t0 = std::chrono::steady_clock::now();
                    for (u64 t = 0; t < nwin; ++t)
                        benchmark_sink += minimal_inliers(p, t * wlen, beta).final_gap;
                    double parallel_ms = ms_since(t0);
                    u64 parallel_evals = perm_eval_count();

                    os << fam << "," << n << "," << nwin << "," << serial_evals << ","
                       << parallel_evals << "," << serial_ms << "," << parallel_ms << ","
                       << (parallel_evals ? double(serial_evals) / double(parallel_evals) : 0.0)
                       << "\n";
                }
            }
        }
    }
    emit(os.str(), out);
    return 0;
}

// ---- banksim --------------------------------------------------------------

int cmd_banksim(const std::string& desc, u64 beta, u64 W, u64 M, const std::string& mode,
                const std::string& format, const std::string& out) {
    auto p = parse_descriptor(desc);
    if (W * M != p.size()) {
        std::cerr << "error: W*M must equal k=" << p.size() << "\n";
        return 1;
    }
    BankLayout layout{W, M, mode == "msb" ? BankMode::Msb : BankMode::Lsb};
    auto cf = contention_check(p, layout);
    if (!cf.ok) {
        std::cerr << "contention: counter j=" << cf.j << " maps windows t=" << cf.t
                  << " and v=" << cf.v << " to the same bank\n";
        return 2;
    }
    auto s = schedule_pruned(p, beta, layout);
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["descriptor"] = p.describe();
        j["beta"] = beta;
        j["W"] = W;
        j["M"] = M;
        j["mode"] = mode;
        j["total_stalls"] = s.total_stalls;
        j["read_steps"] = s.read_steps;
        j["read_steps_stalled"] = s.read_steps_stalled;
        j["write_steps"] = s.write_steps;
        j["stalls_per_bank"] = s.stalls_per_bank;
        auto& tr = j["trace"] = json::array();
        for (const auto& e : s.trace) {
            const char* act = e.action == ScheduleEntry::Action::Read    ? "read"
                              : e.action == ScheduleEntry::Action::Stall ? "stall"
                                                                         : "write";
            tr.push_back({{"step", e.step},
                          {"bank", e.bank},
                          {"action", act},
                          {"linear", e.linear},
                          {"permuted", e.permuted}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << schedule_csv(s);
    }
    emit(os.str(), out);
    std::cerr << "write steps: " << s.write_steps << ", stalls: " << s.total_stalls << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pruned-permutation toolkit"};
    app.require_subcommand(1);

    std::string desc, out, format = "csv", mode = "lsb", family = "brev1D";
    u64 alpha = 0, beta = 0, W = 0, M = 0, seed = 0;
    std::vector<u64> nwins = {8};
    u64 nwin = 1;
    unsigned trials = 1;
    bool verify = false, gap_only = false;

    auto* st = app.add_subcommand("stats", "permutation statistics");
    st->add_option("descriptor", desc)->required();
    st->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    st->add_option("--out", out);

    auto* pr = app.add_subcommand("prune", "pruned interleaving");
    pr->add_option("descriptor", desc)->required();
    auto* alpha_opt = pr->add_option("--alpha", alpha);
    pr->add_option("--beta", beta)->required();
    pr->add_option("--p", nwin, "window count")->check(CLI::PositiveNumber);
    pr->add_flag("--verify", verify, "check parallel output against serial");
    pr->add_flag("--gap-only", gap_only, "report the pruning gap trace only");
    pr->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    pr->add_option("--out", out);

    auto* be = app.add_subcommand("bench", "serial vs parallel cost table");
    be->add_option("--family", family, "interleaver family, or 'all'");
    be->add_option("--p", nwins, "window counts");
    be->add_option("--trials", trials);
    be->add_option("--seed", seed);
    be->add_option("--out", out);

    auto* bs = app.add_subcommand("banksim", "banked schedule simulation");
    bs->add_option("descriptor", desc)->required();
    bs->add_option("--beta", beta)->required();
    bs->add_option("--W", W, "window size")->required();
    bs->add_option("--M", M, "bank count")->required();
    bs->add_option("--mode", mode)->check(CLI::IsMember({"msb", "lsb"}));
    bs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    bs->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (st->parsed()) return cmd_stats(desc, format, out);
        if (pr->parsed())
            return cmd_prune(desc, alpha, alpha_opt->count() > 0, beta, nwin, verify, gap_only,
                             format, out);
        if (be->parsed()) return cmd_bench(family, nwins, trials, seed, out);
        if (bs->parsed()) return cmd_banksim(desc, beta, W, M, mode, format, out);
    } catch (const DescriptorError& e) {
        std::cerr << "descriptor error at position " << e.pos << ": " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const ExactnessError& e) {
        std::cerr << "exactness violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
