// Acceptance runner: one PASS/FAIL line per criterion clause, then one
// timing line per criterion group. Exit status is nonzero if anything fails.
//
//   acceptance            run everything
//   acceptance 3 5b       run group 3 and clause 5b only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "dnacode/app.hpp"
#include "dnacode/balls.hpp"
#include "dnacode/channel.hpp"
#include "dnacode/dup.hpp"
#include "dnacode/multidel.hpp"
#include "dnacode/random.hpp"
#include "dnacode/sliced.hpp"
#include "dnacode/vt.hpp"
#include "oracles.hpp"

using namespace dnacode;

namespace {

Seq b(std::string_view s) { return Seq::binary(s); }
Seq z(std::string_view s, std::size_t q) { return Seq::parse(s, alphabets::zq(q)); }

// First failure wins; later checks still run but keep the first message.
class Check {
public:
    void require(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok && passed_) {
            passed_ = false;
            detail_ = what;
        }
    }
    void note(std::string s) { note_ = std::move(s); }

    bool passed() const { return passed_; }
    std::size_t count() const { return count_; }
    const std::string& detail() const { return passed_ ? note_ : detail_; }

private:
    bool passed_ = true;
    std::size_t count_ = 0;
    std::string detail_;
    std::string note_;
};

struct Clause {
    std::string id;
    std::string title;
    std::function<void(Check&)> body;
};

struct Group {
    std::string id;
    double budget_s;
};

std::string fmt(double v, int digits = 4)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// --- 1 ---------------------------------------------------------------------

void worked_examples(Check& c)
{
    const auto rows = app::reproduce_examples();
    for (const auto& r : rows)
        c.require(r.pass, r.group + ": " + r.name + " expected " + r.expected + ", computed " + r.computed);
    c.note(std::to_string(rows.size()) + " rows");
}

// --- 2 ---------------------------------------------------------------------

constexpr std::size_t kVtMax = 12;

void vt_partition(Check& c)
{
    for (std::size_t n = 1; n <= kVtMax; ++n) {
        std::set<std::string> seen;
        std::size_t total = 0;
        for (std::size_t a = 0; a <= n; ++a)
            for (const auto& w : vt::vt_codebook({n, a})) {
                const auto s = w.str();
                c.require(oracle::vt_sum(s) == a, s + " is not in class " + std::to_string(a));
                c.require(seen.insert(s).second, s + " lies in two classes");
                ++total;
            }
        c.require(total == (std::size_t{1} << n), "classes of length " + std::to_string(n) + " miss words");
    }
}

void vt_single_deletions(Check& c)
{
    std::size_t decoded = 0;
    for (std::size_t n = 1; n <= kVtMax; ++n)
        for (std::size_t a = 0; a <= n; ++a)
            for (const auto& w : vt::vt_codebook({n, a}))
                for (const auto& y : oracle::deletion_ball(w.str(), 1)) {
                    if (y.size() != n - 1)
                        continue;
                    c.require(vt::vt_decode(b(y), {n, a}) == w, y + " does not decode to " + w.str());
                    ++decoded;
                }
    c.note(std::to_string(decoded) + " deletion patterns");
}

void vt_fast_vs_brute(Check& c)
{
    for (std::size_t n = 2; n <= kVtMax; ++n)
        for (std::size_t a = 0; a <= n; ++a)
            for (const auto& y : oracle::all_words(n - 1)) {
                // every single-insertion supersequence in class a
                std::set<std::string> brute;
                for (std::size_t i = 0; i <= y.size(); ++i)
                    for (char s : {'0', '1'}) {
                        auto w = y;
                        w.insert(w.begin() + static_cast<long>(i), s);
                        if (oracle::vt_sum(w) == a)
                            brute.insert(w);
                    }
                c.require(brute.size() == 1, y + " has " + std::to_string(brute.size()) + " preimages");
                if (brute.size() == 1)
                    c.require(vt::vt_decode(b(y), {n, a}).str() == *brute.begin(), "fast decoder disagrees on " + y);
            }
}

void vt_size_bound(Check& c)
{
    for (std::size_t n = 1; n <= kVtMax; ++n) {
        const std::size_t size = vt::vt_codebook({n, 0}).size();
        c.require(size * (n + 1) >= (std::size_t{1} << n), "codebook(" + std::to_string(n) + ", 0) too small");
    }
}

// --- 3 ---------------------------------------------------------------------

constexpr std::size_t kMultidelMax = 14;

void multidel_pairs(Check& c)
{
    std::size_t decoded = 0;
    for (std::size_t n = 2; n <= kMultidelMax; ++n) {
        std::map<std::vector<unsigned __int128>, std::vector<std::string>> groups;
        for (const auto& w : oracle::all_words(n))
            if (oracle::has_gap(w, 1))
                groups[oracle::checksums(w, 2)].push_back(w);
        for (const auto& [key, members] : groups)
            for (const auto& w : members) {
                const auto sums = multidel::weighted_sums(b(w), 2);
                for (const auto& y : oracle::deletion_ball(w, 2)) {
                    if (y.size() != n - 2)
                        continue;
                    std::size_t matches = 0;
                    for (const auto& other : members)
                        matches += oracle::is_subsequence(y, other);
                    c.require(matches == 1, y + " is explained by " + std::to_string(matches) + " codewords");
                    c.require(multidel::decode_constrained(b(y), n, sums, 2).str() == w, y + " misdecodes");
                    ++decoded;
                }
            }
    }
    c.note(std::to_string(decoded) + " deletion pairs");
}

void multidel_indicators(Check& c)
{
    for (std::size_t n = 0; n <= kMultidelMax; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const Seq x = b(w);
            const Seq i10 = multidel::indicator10(x), i01 = multidel::indicator01(x);
            c.require(oracle::has_gap(i10.str(), 1) && oracle::has_gap(i01.str(), 1), w + " gives unconstrained indicators");
            c.require(multidel::reconstruct_from_indicators(i10, i01) == x, w + " does not round-trip");
        }
}

// distinct results of at most two deletions, for words too long for mask enumeration
std::set<std::string> two_deletions(const std::string& x)
{
    std::set<std::string> out{x};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::string once = x.substr(0, i) + x.substr(i + 1);
        out.insert(once);
        for (std::size_t j = i; j < once.size(); ++j)
            out.insert(once.substr(0, j) + once.substr(j + 1));
    }
    return out;
}

void multidel_pipeline(Check& c)
{
    const std::size_t n = 10;
    std::size_t patterns = 0;
    for (const auto& w : oracle::all_words(n)) {
        const auto enc = multidel::encode_t_del(b(w), 2).str();
        for (const auto& y : two_deletions(enc)) {
            Seq got;
            try {
                got = multidel::decode_t_del(b(y), 2, n);
            } catch (const Error& e) {
                c.require(false, w + ": " + e.what());
                continue;
            }
            c.require(got.str() == w, w + " misdecodes from " + y);
            ++patterns;
        }
    }
    c.note(std::to_string(patterns) + " distinct received words");
}

void multidel_redundancy(Check& c)
{
    const std::size_t n = 1024;
    const auto lay = multidel::t_del_layout(n, 2);
    const double bound = 8 * std::log2(double(n)) + 64;
    c.require(double(lay.redundancy()) <= bound,
              "redundancy " + std::to_string(lay.redundancy()) + " bits exceeds " + fmt(bound) + " (checksums " +
                  std::to_string(lay.checksum_bits) + " bits, repeated " +
                  std::to_string(lay.tail_symbols / std::max<std::size_t>(lay.checksum_bits, 1)) + "x)");
    c.note(std::to_string(lay.redundancy()) + " bits <= " + fmt(bound));
}

// --- 4 ---------------------------------------------------------------------

Seq random_bits(Rng& rng, std::size_t n)
{
    std::vector<Symbol> v(n);
    for (auto& x : v)
        x = static_cast<Symbol>(rng.below(2));
    return Seq(std::move(v), alphabets::binary());
}

void sliced_exact(Check& c)
{
    using namespace sliced;
    const double full = set_redundancy(log2_big(binomial(BigUint(64), 4)), 4, 6);
    c.require(std::abs(full) < 1e-9, "full code has redundancy " + fmt(full));
    const double full2 = set_redundancy(log2_big(binomial(BigUint(1) << 16, 64)), 64, 16);
    c.require(std::abs(full2) < 1e-6, "full code (64, 16) has redundancy " + fmt(full2));
    const double idx = set_redundancy(16.0, 4, 6);
    c.require(std::abs(idx - 3.28) <= 0.01, "index-based M=4, L=6 gives " + fmt(idx));
    // C(64, 4) = 635376
    c.require(std::abs(idx - (std::log2(635376.0) - 16)) < 1e-9, "disagrees with log2 C(64, 4) - 16");
    c.note("index-based M=4, L=6: " + fmt(idx, 6) + " bits");
}

void sliced_order(Check& c)
{
    using namespace sliced;
    Rng rng(404);
    for (auto [M, L, t] : std::vector<std::array<std::size_t, 3>>{{8, 16, 1}, {16, 20, 1}, {6, 24, 2}}) {
        const auto lay = data_indexed_layout(M, L, t);
        const Seq d = random_bits(rng, lay.data_bits);
        SlicedChannelConfig cfg;
        cfg.substitutions = t;
        cfg.seed = 17;
        const auto noisy = sliced_channel(encode_data_indexed(d, M, L, t), cfg);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto reads = noisy;
            Rng shuffler(seed);
            shuffler.shuffle(reads.reads);
            c.require(decode_data_indexed(reads, M, L, t) == d, "shuffle seed " + std::to_string(seed) + " changes the output");
        }
        // index-based scheme too
        const auto ilay = indexed_layout(M, L);
        const Seq di = random_bits(rng, ilay.data_bits);
        const auto icw = encode_indexed(di, M, L);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SlicedRead reads{icw.sequences};
            Rng shuffler(seed);
            shuffler.shuffle(reads.reads);
            c.require(decode_indexed(reads, M, L) == di, "index-based shuffle changes the output");
        }
    }
}

void sliced_substitutions(Check& c)
{
    using namespace sliced;
    Rng rng(405);
    const std::size_t M = 4, L = 16, t = 1;
    const auto lay = data_indexed_layout(M, L, t);
    std::size_t patterns = 0;
    for (int rep = 0; rep < 50; ++rep) {
        const Seq d = random_bits(rng, lay.data_bits);
        const auto cw = encode_data_indexed(d, M, L, t);
        for (std::size_t s = 0; s < M; ++s)
            for (std::size_t bit = 0; bit < L; ++bit) {
                SlicedRead reads{cw.sequences};
                auto v = reads.reads[s].vec();
                v[bit] ^= 1;
                reads.reads[s] = reads.reads[s].with(std::move(v));
                try {
                    c.require(decode_data_indexed(reads, M, L, t) == d, "flip of bit " + std::to_string(bit) + " misdecodes");
                } catch (const Error& e) {
                    c.require(false, std::string("decoder raised ") + e.what());
                }
                ++patterns;
            }
    }
    c.note(std::to_string(patterns) + " patterns over 50 messages");
}

void sliced_comparison(Check& c)
{
    using namespace sliced;
    const auto di = data_indexed_layout(64, 16, 1);
    IndexedProtection prot;
    prot.substitutions = 1;
    const auto ib = indexed_layout(64, 16, prot);
    c.require(di.redundancy() < ib.redundancy(),
              "data-indexed " + fmt(di.redundancy()) + " >= index-based " + fmt(ib.redundancy()));
    c.note(fmt(di.redundancy()) + " < " + fmt(ib.redundancy()) + " bits");
}

// --- 5 ---------------------------------------------------------------------

using dup::DupKind;
using dup::Rational;

std::string rc_oracle(const std::string& w)
{
    std::string out(w.rbegin(), w.rend());
    for (auto& ch : out)
        ch = ch == '0' ? '1' : '0';
    return out;
}

// exact law of the random rc process on binary strings, straight from the definition
std::map<std::string, Rational> polya_oracle(const std::string& x, std::size_t k, std::size_t steps)
{
    std::map<std::string, Rational> dist{{x, Rational(1)}};
    for (std::size_t s = 0; s < steps; ++s) {
        std::map<std::string, Rational> next;
        for (const auto& [w, p] : dist) {
            const std::size_t sites = w.size() - k + 1;
            for (std::size_t i = 0; i < sites; ++i)
                next[w.substr(0, i + k) + rc_oracle(w.substr(i, k)) + w.substr(i + k)] += p / sites;
        }
        dist = std::move(next);
    }
    return dist;
}

void dup_polya(Check& c)
{
    const auto dist = dup::polya_exact_dist({b("0"), {DupKind::reverse_complement, 1}, 3, 0});
    c.require(dist.count(b("0111")) && dist.at(b("0111")) == Rational(1, 6), "P(0111) != 1/6");
    c.require(dist.count(b("0101")) && dist.at(b("0101")) == Rational(1, 3), "P(0101) != 1/3");
    const auto oracle_dist = polya_oracle("0", 1, 3);
    c.require(oracle_dist.at("0111") == Rational(1, 6) && oracle_dist.at("0101") == Rational(1, 3),
              "the direct enumeration disagrees with the stated values");
    c.require(oracle_dist.size() == dist.size(), "support sizes differ");
    for (const auto& [w, p] : dist)
        c.require(oracle_dist.count(w.str()) && oracle_dist.at(w.str()) == p, "P(" + w.str() + ") differs");
    for (std::size_t steps : {2u, 4u}) {
        const auto lib = dup::polya_exact_dist({b("01"), {DupKind::reverse_complement, 2}, steps, 0});
        const auto ref = polya_oracle("01", 2, steps);
        c.require(lib.size() == ref.size(), "rc k=2 support differs");
        for (const auto& [w, p] : lib)
            c.require(ref.count(w.str()) && ref.at(w.str()) == p, "rc k=2 P(" + w.str() + ") differs");
    }
}

std::string derivative_oracle(const std::string& x, std::size_t k, std::size_t q)
{
    const std::string a = x + std::string(k, '0');
    const std::string s = std::string(k, '0') + x;
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(static_cast<char>('0' + (q + (a[i] - '0') - (s[i] - '0')) % q));
    return out;
}

void for_each_word(std::size_t n, std::size_t q, const std::function<void(const std::string&)>& f)
{
    std::string w(n, '0');
    for (;;) {
        f(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == static_cast<char>('0' + q - 1))
            w[--i] = '0';
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

// exhaustive while q^n stays below this, sampled above
constexpr double kDerivativeExhaustive = 5e6;

void dup_derivative(Check& c)
{
    Rng rng(506);
    std::size_t words = 0;
    std::string sampled;
    for (std::size_t q : {2u, 3u, 4u})
        for (std::size_t n = 0; n <= 14; ++n) {
            auto one = [&](const std::string& w) {
                const Seq x = z(w, q);
                for (std::size_t k = 1; k <= 3; ++k) {
                    const auto dv = dup::derivative(x, k);
                    c.require(dv.d.str() == derivative_oracle(w, k, q), "derivative of " + w + " is wrong");
                    c.require(dup::integrate(dv) == x, "integrate does not invert on " + w);
                }
                ++words;
            };
            if (std::pow(double(q), double(n)) <= kDerivativeExhaustive) {
                for_each_word(n, q, one);
            } else {
                sampled += " q=" + std::to_string(q) + ",n=" + std::to_string(n);
                for (int i = 0; i < 200000; ++i) {
                    std::string w;
                    for (std::size_t j = 0; j < n; ++j)
                        w.push_back(static_cast<char>('0' + rng.below(q)));
                    one(w);
                }
            }
        }
    c.note(std::to_string(words) + " words, sampled at" + sampled);
}

void dup_commutation(Check& c)
{
    for (std::size_t q : {2u, 3u})
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t n = k; n <= (q == 2 ? 10u : 7u); ++n)
                for (const auto& w : oracle::all_words(n, q)) {
                    const std::string dx = derivative_oracle(w, k, q);
                    for (std::size_t s = 0; s + k <= n; ++s) {
                        const std::string y = w.substr(0, s + k) + w.substr(s, k) + w.substr(s + k);
                        std::string expect = dx;
                        expect.insert(s + k, std::string(k, '0'));
                        c.require(dup::derivative(z(y, q), k).d.str() == expect, "commutation fails on " + w);
                        c.require(dup::apply_dup(z(w, q), {DupKind::tandem, k}, s).str() == y, "tandem copy differs on " + w);
                    }
                }
}

std::vector<std::string> dedup_children(const std::string& x, std::size_t only_k)
{
    std::vector<std::string> out;
    for (std::size_t l = 1; 2 * l <= x.size(); ++l) {
        if (only_k && l != only_k)
            continue;
        for (std::size_t s = 0; s + 2 * l <= x.size(); ++s)
            if (x.compare(s, l, x, s + l, l) == 0)
                out.push_back(x.substr(0, s + l) + x.substr(s + 2 * l));
    }
    return out;
}

std::set<std::string> closure_roots(const std::string& x, std::size_t k)
{
    std::set<std::string> roots, seen{x};
    std::queue<std::string> todo;
    todo.push(x);
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop();
        auto kids = dedup_children(w, k);
        if (kids.empty())
            roots.insert(w);
        for (auto& kid : kids)
            if (seen.insert(kid).second)
                todo.push(kid);
    }
    return roots;
}

void dup_fixed_roots(Check& c)
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 0; n <= 10; ++n)
            for (const auto& w : oracle::all_words(n)) {
                const auto every = closure_roots(w, k);
                c.require(every.size() == 1, w + " has " + std::to_string(every.size()) + " fixed-k roots");
                c.require(dup::tandem_root_fixed_k(b(w), k).str() == *every.begin(), "root of " + w + " differs");
            }
    Rng rng(507);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t q = 2 + rng.below(3), k = 1 + rng.below(3);
        std::string w;
        for (int j = 0; j < 28; ++j)
            w.push_back(static_cast<char>('0' + rng.below(q)));
        const auto root = dup::tandem_root_fixed_k(z(w, q), k).str();
        for (int order = 0; order < 50; ++order) {
            std::string x = w;
            for (auto kids = dedup_children(x, k); !kids.empty(); kids = dedup_children(x, k))
                x = kids[rng.below(kids.size())];
            c.require(x == root, "random order on " + w + " ends at " + x);
        }
    }
}

void dup_binary_roots(Check& c)
{
    const std::set<std::string> six{"0", "1", "01", "10", "010", "101"};
    std::set<std::string> seen;
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& w : oracle::all_words(n))
            for (const auto& r : dup::roots_unbounded_tandem(b(w)).roots) {
                c.require(six.count(r.str()) == 1, w + " has root " + r.str());
                seen.insert(r.str());
            }
    c.require(seen == six, "not every short root occurs");
}

void dup_code(Check& c)
{
    const std::size_t n = 8, q = 2, k = 2;
    const dup::DupRule rule{DupKind::tandem, k};
    const std::size_t bits = dup::dup_code_data_bits(n, q, k);
    std::size_t received = 0;
    for (const auto& d : oracle::all_words(bits)) {
        const Seq cw = dup::dup_code_encode(b(d), n, q, k);
        // naive string expansion, independent of the library's duplication code
        std::set<std::string> level{cw.str()};
        for (int depth = 0; depth <= 3; ++depth) {
            std::set<std::string> next;
            for (const auto& w : level) {
                c.require(dup::dup_code_decode(b(w), q, k).str() == d, w + " does not decode to " + d);
                ++received;
                for (std::size_t s = 0; s + k <= w.size(); ++s)
                    next.insert(w.substr(0, s + k) + w.substr(s, k) + w.substr(s + k));
            }
            level = std::move(next);
        }
    }
    c.note(std::to_string(received) + " received words, " + std::to_string(bits) + " data bits");
}

void dup_irreducible_rate(Check& c)
{
    const double rate = dup::irreducible_rate(24, 2, 3);
    c.require(std::abs(rate - 0.9098) <= 0.05, "rate " + fmt(rate, 6));
    // brute-force count over all 2^24 words: no block of 3 equals the next block of 3
    std::size_t brute = 0;
    for (std::uint32_t w = 0; w < (1u << 24); ++w) {
        const std::uint32_t diff = w ^ (w >> 3);
        bool square = false;
        for (unsigned s = 0; s + 6 <= 24 && !square; ++s)
            square = ((diff >> s) & 7u) == 0;
        brute += !square;
    }
    c.require(dup::irreducible_count(24, 2, 3) == brute, "count differs from brute force " + std::to_string(brute));
    c.note("rate " + fmt(rate, 6) + ", " + std::to_string(brute) + " words");
}

std::size_t naive_count(const std::string& x, const std::string& kind, std::size_t n)
{
    std::set<std::string> level{x};
    while (!level.empty() && level.begin()->size() < n) {
        std::set<std::string> next;
        for (const auto& w : level)
            for (std::size_t s = 0; s < w.size(); ++s)
                next.insert(kind == "end" ? w + w[s] : w.substr(0, s + 1) + w[s] + w.substr(s + 1));
        level = std::move(next);
    }
    return level.size();
}

void dup_capacity(Check& c)
{
    const dup::DupRule end1{DupKind::end, 1}, tan1{DupKind::tandem, 1};
    const auto end0 = dup::capacity_profile(b("0"), end1, 16);
    const auto end01 = dup::capacity_profile(b("01"), end1, 16);
    const auto tan0 = dup::capacity_profile(b("0"), tan1, 16);
    const auto tan01 = dup::capacity_profile(b("01"), tan1, 16);
    for (const auto& pt : end01)
        if (pt.n <= 12)
            c.require(pt.count == naive_count("01", "end", pt.n), "end count at " + std::to_string(pt.n));
    for (const auto& pt : tan01)
        if (pt.n <= 12)
            c.require(pt.count == naive_count("01", "tandem", pt.n), "tandem count at " + std::to_string(pt.n));
    for (std::size_t i = 1; i < end01.size(); ++i) {
        c.require(end01[i].rate > end01[i - 1].rate, "end from 01 does not rise at " + std::to_string(end01[i].n));
        c.require(end0[i].rate >= end0[i - 1].rate, "end from 0 falls at " + std::to_string(end0[i].n));
        c.require(tan0[i].rate <= tan0[i - 1].rate, "tandem from 0 rises at " + std::to_string(tan0[i].n));
        if (tan01[i - 1].n >= 5)
            c.require(tan01[i].rate < tan01[i - 1].rate, "tandem from 01 does not fall at " + std::to_string(tan01[i].n));
    }
    c.note("n <= 16; end(01) " + fmt(end01.back().rate) + ", tandem(01) " + fmt(tan01.back().rate));
}

std::pair<double, double> rc_trend()
{
    dup::PolyaConfig cfg{b("00"), {DupKind::reverse_complement, 2}, 2000, 0};
    double early = 0, late = 0;
    const int runs = 20;
    for (int s = 0; s < runs; ++s) {
        cfg.seed = trial_seed(1000, s);
        for (const auto& r : dup::polya_kmer_series(cfg, 2, 100)) {
            if (r.kmer != "00" && r.kmer != "11")
                continue;
            if (r.step == 100)
                early += r.freq / runs;
            if (r.step == 2000)
                late += r.freq / runs;
        }
    }
    return {early, late};
}

void dup_rc_trend(Check& c)
{
    const auto [early, late] = rc_trend();
    c.require(late < early, "freq(00)+freq(11) does not fall: " + fmt(early) + " -> " + fmt(late));
    c.note("freq(00)+freq(11): step 100 " + fmt(early) + ", step 2000 " + fmt(late));
}

// --- 6 ---------------------------------------------------------------------

std::string report(const app::ExperimentSpec& spec)
{
    std::ostringstream out, err;
    app::execute(spec, {}, out, err);
    return out.str() + err.str();
}

void determinism(Check& c)
{
    app::ExperimentSpec sim;
    sim.module = "dup";
    sim.operation = "simulate";
    sim.parameters = {{"rule", "rc"}, {"k", 2}, {"x", "00"}, {"steps", 2000}, {"emit_kmer_freq", 2}};
    sim.seed = 1000;
    sim.format = app::Format::csv;

    app::ExperimentSpec sl;
    sl.module = "sliced";
    sl.operation = "simulate";
    sl.parameters = {{"M", 16}, {"L", 20}, {"trials", 20}, {"substitutions", 1}, {"losses", 0}};
    sl.seed = 42;
    sl.format = app::Format::json;

    app::ExperimentSpec ch;
    ch.module = "seq";
    ch.operation = "channel";
    ch.parameters = {{"x", std::vector<std::string>(20, "0101101001011010")}, {"deletion_rate", 0.1},
                     {"substitutions", 1}};
    ch.seed = 5;

    for (const auto* spec : {&sim, &sl, &ch}) {
        const auto first = report(*spec), second = report(*spec);
        c.require(!first.empty() && first == second, spec->module + " " + spec->operation + " differs between runs");
    }
    c.require(rc_trend() == rc_trend(), "rc trend statistic differs between runs");

    dup::PolyaConfig p{b("01"), {DupKind::interspersed, 2}, 300, 77};
    c.require(dup::polya_simulate(p) == dup::polya_simulate(p), "interspersed trajectory differs");
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Group> groups{{"1", 1}, {"2", 60}, {"3", 600}, {"4", 300}, {"5", 600}, {"6", 60}};
    const std::vector<Clause> clauses{
        {"1", "worked-example regression", worked_examples},
        {"2a", "VT classes partition {0,1}^n, n <= 12", vt_partition},
        {"2b", "VT corrects every single deletion, n <= 12", vt_single_deletions},
        {"2c", "VT fast decoder equals brute force, n <= 12", vt_fast_vs_brute},
        {"2d", "|VT(n, 0)| >= 2^n / (n+1), n <= 12", vt_size_bound},
        {"3a", "constrained words, n <= 14: every deletion pair decodes uniquely", multidel_pairs},
        {"3b", "indicator round trip over {0,1}^n, n <= 14", multidel_indicators},
        {"3c", "t=2 pipeline, all length-10 messages, all <= 2 deletions", multidel_pipeline},
        {"3d", "t=2 pipeline redundancy at n = 1024 <= 8 log2 n + 64", multidel_redundancy},
        {"4a", "exact set redundancy values", sliced_exact},
        {"4b", "decoding is invariant under read shuffling (10 seeds)", sliced_order},
        {"4c", "data-indexed M=4, L=16, t=1 corrects every single substitution", sliced_substitutions},
        {"4d", "data-indexed redundancy < index-based at M=64, L=16, t=1", sliced_comparison},
        {"5a", "exact Polya probabilities 1/6 and 1/3", dup_polya},
        {"5b", "derivative and integrate are inverse, n <= 14, q <= 4, k <= 3", dup_derivative},
        {"5c", "tandem duplication is 0^k insertion in the derivative, n <= 10", dup_commutation},
        {"5d", "fixed-k root is order invariant", dup_fixed_roots},
        {"5e", "binary tandem roots lie in {0,1,01,10,010,101}, n <= 12", dup_binary_roots},
        {"5f", "duplication code q=2, k=2, n=8 under <= 3 duplications", dup_code},
        {"5g", "irreducible rate q=2, k=3, n=24 within 0.05 of 0.9098", dup_irreducible_rate},
        {"5h", "capacity trend: end rises, tandem falls", dup_capacity},
        {"5i", "rc k=2 trend towards alternation over 20 trajectories", dup_rc_trend},
        {"6", "seeded runs are byte-identical", determinism},
    };

    std::vector<std::string> only(argv + 1, argv + argc);
    auto selected = [&](const std::string& id) {
        return only.empty() || std::any_of(only.begin(), only.end(), [&](const std::string& s) {
                   return s == id || (s.size() == 1 && id[0] == s[0]);
               });
    };

    std::map<std::string, double> elapsed;
    std::map<std::string, bool> ran;
    int failed = 0;
    for (const auto& clause : clauses) {
        if (!selected(clause.id))
            continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            clause.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string group = clause.id.substr(0, 1);
        elapsed[group] += secs;
        ran[group] = true;
        failed += !check.passed();
        std::cout << (check.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << clause.id
                  << clause.title << "  (" << std::fixed << std::setprecision(2) << secs << " s, "
                  << check.count() << " checks)";
        if (!check.detail().empty())
            std::cout << "  " << check.detail();
        std::cout << std::endl;
    }
    for (const auto& g : groups) {
        if (!ran[g.id])
            continue;
        const bool ok = elapsed[g.id] < g.budget_s;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << g.id << "time budget: "
                  << std::fixed << std::setprecision(2) << elapsed[g.id] << " s of " << std::setprecision(0)
                  << g.budget_s << " s" << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " failing line(s)" : std::string("all criteria pass"))
              << std::endl;
    return failed ? 1 : 0;
}
