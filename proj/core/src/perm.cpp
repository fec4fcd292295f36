#include "prunedperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "prunedperm/checked.hpp"

namespace pp {

namespace {
thread_local u64 g_evals = 0;
}

u64 perm_eval_count() { return g_evals; }
void reset_perm_eval_count() { g_evals = 0; }

PermSize PermSize::from_bits(int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("bit count out of range [1,63]");
    return PermSize{n, u64{1} << n};
}

u64 eval_brp(int n, u64 j) {
    ++g_evals;
    u64 r = 0;
    for (int i = 0; i < n; ++i) r |= ((j >> i) & 1) << (n - 1 - i);
    return r;
}

u64 eval_split_brp(int n, u64 j) {
    // pi_n(j) = 2*pi_{n-1}(j) for j < k/2, else 2*pi_{n-1}(j - k/2) + 1
    ++g_evals;
    if (n == 1) return j;
    u64 half = u64{1} << (n - 1);
    if (j < half) return 2 * eval_brp(n - 1, j);
    return 2 * eval_brp(n - 1, j - half) + 1;
}

u64 eval_circular(u64 k, u64 c, u64 j) {
    ++g_evals;
    u64 s = j + c;
    return s >= k ? s - k : s;
}

u64 eval_lcs(u64 k, u64 h, u64 j) {
    ++g_evals;
    return static_cast<u64>((static_cast<unsigned __int128>(h) * j) % k);
}

struct Permutation::Impl {
    static std::shared_ptr<Impl> make(Kind kind) {
        auto impl = std::make_shared<Impl>();
        impl->kind = kind;
        return impl;
    }

    Kind kind;
    u64 k = 0;
    int n = 0;              // Brp bits
    u64 a = 0, b = 0;       // circ c / lcs h / qpp h,b
    std::vector<Permutation> comps;
    std::vector<u64> omega;
    std::vector<u64> tab, inv_tab;
};

namespace {

std::vector<u64> invert_table(const std::vector<u64>& tab) {
    std::vector<u64> inv(tab.size(), tab.size());
    for (u64 j = 0; j < tab.size(); ++j) {
        if (tab[j] >= tab.size() || inv[tab[j]] != tab.size())
            throw std::invalid_argument("table is not a permutation");
        inv[tab[j]] = j;
    }
    return inv;
}

constexpr u64 kMaxTable = u64{1} << 24;

}  // namespace

Permutation Permutation::brp(int n) {
    auto sz = PermSize::from_bits(n);
    auto impl = Impl::make(Kind::Brp);
    impl->k = sz.k;
    impl->n = n;
    return Permutation(impl);
}

Permutation Permutation::circular(u64 k, u64 c) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    auto impl = Impl::make(Kind::Circular);
    impl->k = k;
    impl->a = c % k;
    return Permutation(impl);
}

Permutation Permutation::lcs(u64 k, u64 h) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (std::gcd(k, h % k) != 1) throw std::invalid_argument("lcs multiplier not coprime to k");
    auto impl = Impl::make(Kind::Lcs);
    impl->k = k;
    impl->a = h % k;
    return Permutation(impl);
}

Permutation Permutation::qpp(u64 k, u64 h, u64 b) {
    if (k == 0 || k > kMaxTable) throw std::invalid_argument("qpp size out of range");
    auto impl = Impl::make(Kind::Qpp);
    impl->k = k;
    impl->a = h % k;
    impl->b = b % k;
    impl->tab.resize(k);
    for (u64 j = 0; j < k; ++j) {
        auto jj = static_cast<unsigned __int128>(j);
        impl->tab[j] = static_cast<u64>((impl->a * jj + impl->b * jj % k * jj) % k);
    }
    impl->inv_tab = invert_table(impl->tab);  // rejects non-bijective (h,b)
    return Permutation(impl);
}

Permutation Permutation::flip(Permutation inner) {
    auto impl = Impl::make(Kind::Flip);
    impl->k = inner.size();
    impl->comps.push_back(std::move(inner));
    return Permutation(impl);
}

Permutation Permutation::block2d(Permutation s1, Permutation s2) {
    auto impl = Impl::make(Kind::Block2D);
    impl->k = mul_ck_u64(s1.size(), s2.size());
    impl->comps.push_back(std::move(s1));
    impl->comps.push_back(std::move(s2));
    return Permutation(impl);
}

Permutation Permutation::mstream(std::vector<Permutation> sigmas, std::vector<u64> omega) {
    if (sigmas.empty() || sigmas.size() != omega.size())
        throw std::invalid_argument("mstream needs one sigma per stream");
    u64 m = sigmas.size();
    u64 sub = sigmas[0].size();
    for (const auto& s : sigmas)
        if (s.size() != sub) throw std::invalid_argument("mstream sigmas must share one size");
    invert_table(omega);  // omega must permute [0,m)
    auto impl = Impl::make(Kind::MStream);
    impl->k = mul_ck_u64(m, sub);
    impl->comps = std::move(sigmas);
    impl->omega = std::move(omega);
    return Permutation(impl);
}

Permutation Permutation::table(std::vector<u64> map) {
    if (map.empty() || map.size() > kMaxTable) throw std::invalid_argument("table size out of range");
    auto impl = Impl::make(Kind::Table);
    impl->k = map.size();
    impl->inv_tab = invert_table(map);
    impl->tab = std::move(map);
    return Permutation(impl);
}

u64 Permutation::size() const { return impl_->k; }
Permutation::Kind Permutation::kind() const { return impl_->kind; }

u64 Permutation::operator()(u64 j) const {
    const Impl& im = *impl_;
    if (j >= im.k) throw std::out_of_range("permutation argument out of range");
    switch (im.kind) {
        case Kind::Brp: return eval_brp(im.n, j);
        case Kind::Circular: return eval_circular(im.k, im.a, j);
        case Kind::Lcs: return eval_lcs(im.k, im.a, j);
        case Kind::Qpp:
        case Kind::Table:
            ++g_evals;
            return im.tab[j];
        case Kind::Flip: return im.k - 1 - im.comps[0](j);
        case Kind::Block2D: {
            u64 k1 = im.comps[0].size(), k2 = im.comps[1].size();
            u64 x1 = j / k2, x2 = j % k2;
            return im.comps[1](x2) * k1 + im.comps[0](x1);
        }
        case Kind::MStream: {
            u64 m = im.comps.size();
            u64 q = j / m, r = j % m, w = im.omega[r];
            return m * im.comps[w](q) + w;
        }
    }
    throw std::logic_error("unreachable");
}

u64 Permutation::inverse(u64 y) const {
    const Impl& im = *impl_;
    if (y >= im.k) throw std::out_of_range("permutation argument out of range");
    switch (im.kind) {
        case Kind::Brp: return eval_brp(im.n, y);
        case Kind::Circular: return eval_circular(im.k, im.k - im.a == im.k ? 0 : im.k - im.a, y);
        case Kind::Lcs: {
            // scan-free only for power-of-two k via Newton iteration on the odd multiplier
            if ((im.k & (im.k - 1)) == 0) {
                u64 inv = im.a;
                for (int i = 0; i < 6; ++i) inv *= 2 - im.a * inv;
                return eval_lcs(im.k, inv % im.k, y);
            }
            for (u64 j = 0; j < im.k; ++j)
                if (eval_lcs(im.k, im.a, j) == y) return j;
            throw std::logic_error("lcs inverse scan failed");
        }
        case Kind::Qpp:
        case Kind::Table:
            ++g_evals;
            return im.inv_tab[y];
        case Kind::Flip: return im.comps[0].inverse(im.k - 1 - y);
        case Kind::Block2D: {
            u64 k1 = im.comps[0].size(), k2 = im.comps[1].size();
            u64 x1 = im.comps[0].inverse(y % k1);
            u64 x2 = im.comps[1].inverse(y / k1);
            return x1 * k2 + x2;
        }
        case Kind::MStream: {
            u64 m = im.comps.size();
            u64 w = y % m;
            u64 r = static_cast<u64>(std::find(im.omega.begin(), im.omega.end(), w) - im.omega.begin());
            return m * im.comps[w].inverse(y / m) + r;
        }
    }
    throw std::logic_error("unreachable");
}

int Permutation::brp_bits() const {
    if (impl_->kind != Kind::Brp) throw std::logic_error("not a bit-reversal permutation");
    return impl_->n;
}

u64 Permutation::shift() const {
    if (impl_->kind != Kind::Circular) throw std::logic_error("not a circular shift");
    return impl_->a;
}

u64 Permutation::multiplier() const {
    if (impl_->kind != Kind::Lcs) throw std::logic_error("not a linear congruential permutation");
    return impl_->a;
}

const Permutation& Permutation::inner() const {
    if (impl_->kind != Kind::Flip) throw std::logic_error("not a flip");
    return impl_->comps[0];
}

const Permutation& Permutation::component(std::size_t i) const {
    if (i >= impl_->comps.size()) throw std::out_of_range("no such component");
    return impl_->comps[i];
}

std::size_t Permutation::component_count() const { return impl_->comps.size(); }

const std::vector<u64>& Permutation::omega() const {
    if (impl_->kind != Kind::MStream) throw std::logic_error("not an m-stream permutation");
    return impl_->omega;
}

std::string Permutation::describe() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Brp: return "brp:n=" + std::to_string(im.n);
        case Kind::Circular: return "circ:k=" + std::to_string(im.k) + ",c=" + std::to_string(im.a);
        case Kind::Lcs: return "lcs:k=" + std::to_string(im.k) + ",h=" + std::to_string(im.a);
        case Kind::Qpp:
            return "qpp:k=" + std::to_string(im.k) + ",h=" + std::to_string(im.a) +
                   ",b=" + std::to_string(im.b);
        case Kind::Flip: return "flip:(" + im.comps[0].describe() + ")";
        case Kind::Block2D:
            return "block2d:s1=(" + im.comps[0].describe() + ")/s2=(" + im.comps[1].describe() + ")";
        case Kind::MStream: {
            std::string s = "mstream:omega=";
            for (std::size_t i = 0; i < im.omega.size(); ++i)
                s += (i ? "-" : "") + std::to_string(im.omega[i]);
            for (std::size_t i = 0; i < im.comps.size(); ++i)
                s += "/s" + std::to_string(i) + "=(" + im.comps[i].describe() + ")";
            return s;
        }
        case Kind::Table: {
            std::string s = "table:";
            for (std::size_t i = 0; i < im.tab.size(); ++i)
                s += (i ? "," : "") + std::to_string(im.tab[i]);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

bool validate_perm(const Permutation& p) {
    u64 k = p.size();
    if (k > kMaxTable) throw std::invalid_argument("validate_perm: size too large for full check");
    std::vector<bool> seen(k, false);
    for (u64 j = 0; j < k; ++j) {
        u64 y = p(j);
        if (y >= k || seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

// ---------------------------------------------------------------------------
// descriptor parser

DescriptorError::DescriptorError(const std::string& msg, std::size_t pos_)
    : std::runtime_error(msg + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}

namespace {

struct Parser {
    const std::string& s;
    std::size_t p = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw DescriptorError(msg, p); }

    bool eat(char c) {
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        std::size_t start = p;
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
        if (p == start) fail("expected identifier");
        return s.substr(start, p - start);
    }

    u64 number() {
        std::size_t start = p;
        u64 v = 0;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            u64 d = static_cast<u64>(s[p] - '0');
            if (v > (UINT64_MAX - d) / 10) fail("number overflows 64 bits");
            v = v * 10 + d;
            ++p;
        }
        if (p == start) fail("expected number");
        return v;
    }

    u64 keyed_number(const std::string& key) {
        std::size_t mark = p;
        if (ident() != key) { p = mark; fail("expected '" + key + "='"); }
        expect('=');
        return number();
    }

    // nested descriptor: parenthesized, or raw text up to a top-level '/'
    Permutation nested() {
        if (eat('(')) {
            Permutation q = descriptor();
            expect(')');
            return q;
        }
        std::size_t start = p;
        int depth = 0;
        while (p < s.size() && (depth > 0 || s[p] != '/')) {
            if (s[p] == '(') ++depth;
            if (s[p] == ')') { if (depth == 0) break; --depth; }
            ++p;
        }
        std::size_t end = p;
        p = start;
        Permutation q = descriptor();
        if (p != end) fail("trailing characters in nested descriptor");
        return q;
    }

    Permutation descriptor() {
        std::size_t at = p;
        std::string fam = ident();
        expect(':');
        if (fam == "brp") {
            // brp:n=10 or shorthand brp:10
            u64 n = (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
                        ? number()
                        : keyed_number("n");
            if (n < 1 || n > 63) fail("brp bit count out of range [1,63]");
            return Permutation::brp(static_cast<int>(n));
        }
        if (fam == "circ") {
            u64 k = keyed_number("k");
            expect(',');
            u64 c = keyed_number("c");
            return Permutation::circular(k, c);
        }
        if (fam == "lcs") {
            u64 k = keyed_number("k");
            expect(',');
            u64 h = keyed_number("h");
            return Permutation::lcs(k, h);
        }
        if (fam == "qpp") {
            u64 k = keyed_number("k");
            expect(',');
            u64 h = keyed_number("h");
            expect(',');
            u64 b = keyed_number("b");
            return Permutation::qpp(k, h, b);
        }
        if (fam == "flip") return Permutation::flip(nested());
        if (fam == "block2d") {
            std::size_t mark = p;
            if (ident() != "s1") { p = mark; fail("expected 's1='"); }
            expect('=');
            Permutation s1 = nested();
            expect('/');
            mark = p;
            if (ident() != "s2") { p = mark; fail("expected 's2='"); }
            expect('=');
            Permutation s2 = nested();
            return Permutation::block2d(std::move(s1), std::move(s2));
        }
        if (fam == "mstream") {
            std::size_t mark = p;
            if (ident() != "omega") { p = mark; fail("expected 'omega='"); }
            expect('=');
            std::vector<u64> omega{number()};
            while (eat('-')) omega.push_back(number());
            std::vector<Permutation> sigmas;
            for (std::size_t i = 0; i < omega.size(); ++i) {
                expect('/');
                mark = p;
                if (ident() != "s" + std::to_string(i)) { p = mark; fail("expected 's" + std::to_string(i) + "='"); }
                expect('=');
                sigmas.push_back(nested());
            }
            return Permutation::mstream(std::move(sigmas), std::move(omega));
        }
        if (fam == "table") {
            std::vector<u64> map{number()};
            while (eat(',')) map.push_back(number());
            return Permutation::table(std::move(map));
        }
        p = at;
        fail("unknown permutation family '" + fam + "'");
    }
};

}  // namespace

Permutation parse_descriptor(const std::string& text) {
    Parser parser{text};
    Permutation q = parser.descriptor();
    if (parser.p != text.size()) parser.fail("trailing characters after descriptor");
    return q;
}

}  // namespace pp
