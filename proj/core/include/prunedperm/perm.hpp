#pragma once

// Permutation families: bit reversal, circular shift, linear congruential,
// quadratic polynomial (table-backed), flip, 2D block and m-stream
// compositions, and explicit tables. Immutable value objects.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

using u64 = std::uint64_t;

// global evaluation counter: every permutation point-evaluation bumps this.
// It is the deterministic cost metric the bench/speedup numbers report.
u64 perm_eval_count();
void reset_perm_eval_count();

struct PermSize {
    int n = 0;   // bit count
    u64 k = 0;   // 2^n
    static PermSize from_bits(int n);
};

// bit reversal of the n-bit representation of j
u64 eval_brp(int n, u64 j);
// same value computed through the pi_n -> pi_{n-1} split identity
u64 eval_split_brp(int n, u64 j);
u64 eval_circular(u64 k, u64 c, u64 j);
u64 eval_lcs(u64 k, u64 h, u64 j);

class Permutation {
  public:
    enum class Kind { Brp, Circular, Lcs, Qpp, Flip, Block2D, MStream, Table };

    static Permutation brp(int n);
    static Permutation circular(u64 k, u64 c);
    static Permutation lcs(u64 k, u64 h);          // h*j mod k, h odd
    static Permutation qpp(u64 k, u64 h, u64 b);   // h*j + b*j^2 mod k, table-backed
    static Permutation flip(Permutation inner);    // k-1-inner(j)
    static Permutation block2d(Permutation s1, Permutation s2);
    static Permutation mstream(std::vector<Permutation> sigmas, std::vector<u64> omega);
    static Permutation table(std::vector<u64> map);  // validates bijectivity

    u64 size() const;
    Kind kind() const;
    u64 operator()(u64 j) const;
    u64 inverse(u64 y) const;  // closed form where available, else table/scan

    // component accessors (throw on kind mismatch)
    int brp_bits() const;
    u64 shift() const;      // Circular c
    u64 multiplier() const; // Lcs h
    const Permutation& inner() const;                 // Flip
    const Permutation& component(std::size_t i) const;  // Block2D / MStream
    std::size_t component_count() const;
    const std::vector<u64>& omega() const;  // MStream stream order

    std::string describe() const;

  private:
    struct Impl;
    explicit Permutation(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// full bijectivity check by marking images; k <= 2^24
bool validate_perm(const Permutation& p);

// Descriptor grammar (see README / CLI --help):
//   brp:n=10 | circ:k=32,c=7 | lcs:k=64,h=31 | qpp:k=2048,h=63,b=128
//   flip:<desc> | block2d:s1=<desc>/s2=<desc>
//   mstream:omega=1-0/s0=<desc>/s1=<desc> | table:3,1,7,2,5,8,6,4,0,9
struct DescriptorError : std::runtime_error {
    std::size_t pos;
    DescriptorError(const std::string& msg, std::size_t pos);
};
Permutation parse_descriptor(const std::string& text);

}  // namespace pp
