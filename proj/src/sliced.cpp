#include "dnacode/sliced.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include "dnacode/bch.hpp"
#include "dnacode/channel.hpp"

namespace dnacode::sliced {

namespace {

std::size_t ceil_log2(std::size_t x)
{
    std::size_t b = 0;
    while ((std::size_t{1} << b) < x)
        ++b;
    return b;
}

std::uint32_t read_word(const std::vector<Symbol>& s, std::size_t from, std::size_t len)
{
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < len; ++i)
        v = (v << 1) | s[from + i];
    return v;
}

void append_word(std::vector<Symbol>& out, std::uint64_t v, std::size_t len)
{
    for (std::size_t i = len; i-- > 0;)
        out.push_back(static_cast<Symbol>((v >> i) & 1));
}

BigUint bits_to_big(const std::vector<Symbol>& s, std::size_t from, std::size_t len)
{
    BigUint v = 0;
    for (std::size_t i = 0; i < len; ++i)
        v = (v << 1) | BigUint(s[from + i]);
    return v;
}

void append_big(std::vector<Symbol>& out, const BigUint& v, std::size_t len)
{
    for (std::size_t i = len; i-- > 0;)
        out.push_back(boost::multiprecision::bit_test(v, static_cast<unsigned>(i)) ? 1 : 0);
}

void require_binary(const Seq& s, const char* what)
{
    if (s.q() != 2)
        throw InvalidArgument(std::string(what) + " must be binary");
}

void check_shape(std::size_t M, std::size_t L)
{
    if (M == 0)
        throw InvalidArgument("M must be positive");
    if (L < 64 && M > (std::size_t{1} << L))
        throw InvalidArgument("M exceeds 2^L");
}

const std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

// Minimum substitutions turning c into r using at most D deletions and I insertions.
std::size_t min_substitutions(const Seq& c, const Seq& r, std::size_t D, std::size_t I)
{
    const std::size_t n = c.size(), m = r.size();
    if (m + D < n || n + I < m)
        return kInf;
    // dp[i][j][d]
    const std::size_t W = D + 1;
    std::vector<std::size_t> dp((n + 1) * (m + 1) * W, kInf);
    auto at = [&](std::size_t i, std::size_t j, std::size_t d) -> std::size_t& {
        return dp[(i * (m + 1) + j) * W + d];
    };
    at(0, 0, 0) = 0;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            for (std::size_t d = 0; d <= D; ++d) {
                const std::size_t cur = at(i, j, d);
                if (cur >= kInf)
                    continue;
                // insertions used so far: j - (i - d)
                const std::size_t ins = j + d - i;
                if (i < n && j < m)
                    at(i + 1, j + 1, d) = std::min(at(i + 1, j + 1, d), cur + (c[i] != r[j]));
                if (i < n && d < D)
                    at(i + 1, j, d + 1) = std::min(at(i + 1, j, d + 1), cur);
                if (j < m && ins < I)
                    at(i, j + 1, d) = std::min(at(i, j + 1, d), cur);
            }
    std::size_t best = kInf;
    for (std::size_t d = 0; d <= D; ++d)
        best = std::min(best, at(n, m, d));
    return best;
}

// nearest word among pool[0..count); nullopt on a tie or distance > radius
std::optional<std::size_t> nearest(const std::vector<std::uint32_t>& pool, std::size_t count,
                                   std::uint32_t word, std::size_t radius)
{
    std::size_t best = kInf, arg = 0, ties = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t dist = hamming(pool[i], word);
        if (dist < best) {
            best = dist;
            arg = i;
            ties = 1;
        } else if (dist == best) {
            ++ties;
        }
    }
    if (best > radius || ties != 1)
        return std::nullopt;
    return arg;
}

std::string list_str(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

SlicedCodeword SlicedCodeword::from(std::vector<Seq> sequences, std::size_t L)
{
    for (const auto& s : sequences) {
        require_binary(s, "sliced sequences");
        if (s.size() != L)
            throw InvalidArgument("sliced sequences must all have length " + std::to_string(L));
    }
    std::sort(sequences.begin(), sequences.end());
    if (std::adjacent_find(sequences.begin(), sequences.end()) != sequences.end())
        throw InvalidArgument("sliced sequences must be distinct");
    SlicedCodeword cw;
    cw.M = sequences.size();
    cw.L = L;
    cw.sequences = std::move(sequences);
    if (cw.M > 0)
        check_shape(cw.M, L);
    return cw;
}

void validate(const SlicedChannelConfig& cfg, std::size_t M, std::size_t L)
{
    if (cfg.losses > M)
        throw InvalidArgument("cannot lose more sequences than M");
    if (cfg.substitutions > (M - cfg.losses) * L)
        throw InvalidArgument("more substitutions than surviving symbols");
    if (cfg.max_deletions > L)
        throw InvalidArgument("deletion budget exceeds L");
}

SlicedRead sliced_channel(const SlicedCodeword& cw, const SlicedChannelConfig& cfg, Rng& rng)
{
    validate(cfg, cw.M, cw.L);
    auto keep = rng.sample(cw.M, cw.M - cfg.losses);
    std::sort(keep.begin(), keep.end());
    std::vector<std::vector<Symbol>> survivors;
    survivors.reserve(keep.size());
    for (auto i : keep)
        survivors.push_back(cw.sequences[i].vec());

    for (auto pos : rng.sample(survivors.size() * cw.L, cfg.substitutions))
        survivors[pos / cw.L][pos % cw.L] ^= 1;

    SlicedRead out;
    for (auto& s : survivors) {
        Seq seq(std::move(s), alphabets::binary());
        if (cfg.max_deletions > 0 || cfg.max_insertions > 0) {
            ChannelConfig point;
            point.deletions = static_cast<std::size_t>(rng.below(cfg.max_deletions + 1));
            point.insertions = static_cast<std::size_t>(rng.below(cfg.max_insertions + 1));
            seq = apply_channel(seq, point, rng);
        }
        out.reads.push_back(std::move(seq));
    }
    rng.shuffle(out.reads);
    return out;
}

SlicedRead sliced_channel(const SlicedCodeword& cw, const SlicedChannelConfig& cfg)
{
    Rng rng(cfg.seed);
    return sliced_channel(cw, cfg, rng);
}

bool sliced_reachable(const SlicedCodeword& cw, const SlicedRead& read, const SlicedChannelConfig& cfg)
{
    if (cfg.losses > cw.M || read.reads.size() != cw.M - cfg.losses)
        return false;
    const std::size_t R = read.reads.size();
    std::vector<std::vector<std::size_t>> cost(R, std::vector<std::size_t>(cw.M));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < cw.M; ++c)
            cost[r][c] = min_substitutions(cw.sequences[c], read.reads[r], cfg.max_deletions,
                                           cfg.max_insertions);

    // injective assignment of reads to codeword sequences, branch and bound
    std::vector<char> used(cw.M, 0);
    std::size_t best = kInf;
    auto dfs = [&](auto&& self, std::size_t r, std::size_t acc) -> void {
        if (acc >= best || acc > cfg.substitutions)
            return;
        if (r == R) {
            best = acc;
            return;
        }
        for (std::size_t c = 0; c < cw.M; ++c)
            if (!used[c] && cost[r][c] < kInf) {
                used[c] = 1;
                self(self, r + 1, acc + cost[r][c]);
                used[c] = 0;
            }
    };
    dfs(dfs, 0, 0);
    return best <= cfg.substitutions;
}

BigUint binomial(const BigUint& n, std::size_t k)
{
    if (BigUint(k) > n)
        return 0;
    BigUint r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

double log2_big(const BigUint& x)
{
    if (x <= 0)
        throw InvalidArgument("log2 of a non-positive integer");
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(x));
    if (top < 53)
        return std::log2(x.convert_to<double>());
    const std::size_t shift = top - 52;
    BigUint head = x >> shift;
    return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

double set_redundancy(double code_size_log2, std::size_t M, std::size_t L)
{
    const BigUint universe = BigUint(1) << L;
    if (BigUint(M) > universe)
        throw InvalidArgument("M exceeds 2^L");
    return log2_big(binomial(universe, M)) - code_size_log2;
}

std::size_t hamming(std::uint32_t a, std::uint32_t b) noexcept
{
    return static_cast<std::size_t>(std::popcount(a ^ b));
}

const std::vector<std::uint32_t>& lexicode(std::size_t p, std::size_t d)
{
    if (p > kMaxPrefixBits)
        throw BoundExceeded("prefix length " + std::to_string(p) + " exceeds " +
                            std::to_string(kMaxPrefixBits));
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.try_emplace({p, d});
    if (fresh) {
        auto& code = it->second;
        const std::uint32_t end = std::uint32_t{1} << p;
        // every flip pattern of weight < d; a new word must avoid all balls so far
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 0; m < end; ++m)
            if (static_cast<std::size_t>(std::popcount(m)) < d)
                masks.push_back(m);
        std::vector<bool> covered(end, false);
        for (std::uint32_t w = 0; w < end; ++w) {
            if (covered[w])
                continue;
            code.push_back(w);
            for (auto m : masks)
                covered[w ^ m] = true;
        }
    }
    return it->second;
}

BigUint PrefixCodebookFamily::size() const { return binomial(BigUint(pool->size()), M); }

std::vector<std::uint32_t> PrefixCodebookFamily::set(BigUint rank) const
{
    const std::size_t K = pool->size();
    if (rank >= size())
        throw InvalidArgument("family rank out of range");
    std::vector<std::uint32_t> out;
    std::size_t v = 0;
    for (std::size_t i = 0; i < M; ++i) {
        const std::size_t r = M - 1 - i;
        // sets starting with pool[v] at this position: C(K-1-v, r)
        BigUint count = binomial(BigUint(K - 1 - v), r);
        while (rank >= count) {
            rank -= count;
            const std::size_t a = K - 1 - v; // count = C(a, r) -> C(a-1, r)
            count = a == 0 ? BigUint(0) : count * (a - r) / a;
            ++v;
        }
        out.push_back((*pool)[v]);
        ++v;
    }
    return out;
}

BigUint PrefixCodebookFamily::rank(const std::vector<std::uint32_t>& words) const
{
    const std::size_t K = pool->size();
    if (words.size() != M)
        throw InvalidArgument("prefix set must have M words");
    std::vector<std::size_t> idx;
    for (auto w : words) {
        auto it = std::lower_bound(pool->begin(), pool->end(), w);
        if (it == pool->end() || *it != w)
            throw InvalidArgument("word is not in the prefix code");
        idx.push_back(static_cast<std::size_t>(it - pool->begin()));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw InvalidArgument("prefix set has repeated words");
    BigUint rank = 0;
    std::size_t v = 0;
    for (std::size_t i = 0; i < M; ++i) {
        const std::size_t r = M - 1 - i;
        for (; v < idx[i]; ++v)
            rank += binomial(BigUint(K - 1 - v), r);
        ++v;
    }
    return rank;
}

PrefixCodebookFamily greedy_prefix_family(std::size_t M, std::size_t p, std::size_t d)
{
    if (M == 0 || d == 0)
        throw InvalidArgument("M and d must be positive");
    const auto& pool = lexicode(p, d);
    if (pool.size() < M)
        throw InvalidArgument("no " + std::to_string(M) + " words of length " + std::to_string(p) +
                              " at distance " + std::to_string(d));
    return PrefixCodebookFamily{M, p, d, &pool};
}

// --- index-based ---------------------------------------------------------

double IndexedLayout::redundancy() const
{
    return set_redundancy(static_cast<double>(data_bits), physical, L);
}

IndexedLayout indexed_layout(std::size_t M, std::size_t L, const IndexedProtection& protect)
{
    if (protect.replication == 0)
        throw InvalidArgument("replication must be at least 1");
    IndexedLayout lay;
    lay.M = M;
    lay.L = L;
    lay.protection = protect;
    lay.physical = M * protect.replication;
    check_shape(lay.physical, L);
    if (protect.substitutions == 0) {
        lay.index_bits = ceil_log2(lay.physical);
    } else {
        const std::size_t d = 2 * protect.substitutions + 1;
        std::size_t p = 1;
        while (p <= std::min(L, kMaxPrefixBits) && lexicode(p, d).size() < lay.physical)
            ++p;
        if (p > std::min(L, kMaxPrefixBits))
            throw InvalidArgument("no index code fits in L bits");
        lay.index_bits = p;
    }
    if (lay.index_bits > L)
        throw InvalidArgument("index does not fit in L bits");
    lay.payload_bits = M * (L - lay.index_bits);
    lay.payload_t = std::max<std::size_t>(protect.substitutions, protect.payload_arbitration ? 1 : 0);
    if (lay.payload_bits > 0) {
        bch::BchCode code(lay.payload_bits, lay.payload_t);
        lay.parity_bits = code.parity_bits();
    }
    lay.data_bits = lay.payload_bits - lay.parity_bits;
    return lay;
}

namespace {

std::uint32_t index_word(const IndexedLayout& lay, std::size_t slot)
{
    if (lay.protection.substitutions == 0)
        return static_cast<std::uint32_t>(slot);
    return lexicode(lay.index_bits, 2 * lay.protection.substitutions + 1)[slot];
}

std::optional<std::size_t> read_slot(const IndexedLayout& lay, const Seq& read)
{
    if (read.size() != lay.L || read.q() != 2)
        return std::nullopt;
    const std::uint32_t w = read_word(read.vec(), 0, lay.index_bits);
    if (lay.protection.substitutions == 0) {
        if (w >= lay.physical)
            return std::nullopt;
        return w;
    }
    const auto& pool = lexicode(lay.index_bits, 2 * lay.protection.substitutions + 1);
    return nearest(pool, lay.physical, w, lay.protection.substitutions);
}

std::vector<Symbol> payload_of(const IndexedLayout& lay, const Seq& read)
{
    return {read.vec().begin() + static_cast<std::ptrdiff_t>(lay.index_bits), read.vec().end()};
}

} // namespace

SlicedCodeword encode_indexed(const Seq& data, std::size_t M, std::size_t L, const IndexedProtection& protect)
{
    require_binary(data, "data");
    const auto lay = indexed_layout(M, L, protect);
    if (data.size() != lay.data_bits)
        throw InvalidArgument("index-based data must have " + std::to_string(lay.data_bits) + " bits");
    std::vector<Symbol> payload = data.vec();
    if (lay.payload_bits > 0)
        payload = bch::BchCode(lay.payload_bits, lay.payload_t).encode(payload);
    const std::size_t chunk = L - lay.index_bits;
    std::vector<Seq> seqs;
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < protect.replication; ++j) {
            const std::size_t slot = i * protect.replication + j;
            std::vector<Symbol> s;
            append_word(s, index_word(lay, slot), lay.index_bits);
            s.insert(s.end(), payload.begin() + static_cast<std::ptrdiff_t>(i * chunk),
                     payload.begin() + static_cast<std::ptrdiff_t>((i + 1) * chunk));
            seqs.emplace_back(std::move(s), alphabets::binary());
        }
    return SlicedCodeword::from(std::move(seqs), L);
}

Seq decode_indexed(const SlicedRead& reads, std::size_t M, std::size_t L, const IndexedProtection& protect)
{
    const auto lay = indexed_layout(M, L, protect);
    const std::size_t r = protect.replication;
    std::vector<std::vector<std::vector<Symbol>>> slots(lay.physical);
    std::vector<std::vector<Symbol>> orphans;
    for (const auto& read : reads.reads) {
        if (auto slot = read_slot(lay, read))
            slots[*slot].push_back(payload_of(lay, read));
        else if (read.size() == L && read.q() == 2)
            orphans.push_back(payload_of(lay, read));
    }

    // per logical index: the candidate payloads, first present replica wins
    std::vector<std::vector<std::vector<Symbol>>> logical(M);
    std::vector<std::size_t> missing, duplicated;
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = 0; j < r && logical[i].empty(); ++j) {
            auto& group = slots[i * r + j];
            std::sort(group.begin(), group.end());
            group.erase(std::unique(group.begin(), group.end()), group.end());
            logical[i] = group;
        }
        if (logical[i].empty())
            missing.push_back(i);
        else if (logical[i].size() > 1)
            duplicated.push_back(i);
    }

    const bch::BchCode code(lay.payload_bits, lay.payload_bits > 0 ? lay.payload_t : 0);
    auto assemble = [&](const std::vector<const std::vector<Symbol>*>& pick)
        -> std::optional<bch::BchCode::Decoded> {
        std::vector<Symbol> word;
        for (auto* part : pick)
            word.insert(word.end(), part->begin(), part->end());
        if (lay.payload_bits == 0)
            return bch::BchCode::Decoded{{}, 0};
        return code.decode(std::move(word));
    };

    std::vector<std::vector<const std::vector<Symbol>*>> options;
    if (missing.empty() && duplicated.empty()) {
        options.emplace_back();
        for (auto& l : logical)
            options.back().push_back(&l.front());
    } else if (protect.payload_arbitration && lay.payload_t > 0 && missing.size() == 1 &&
               ((duplicated.size() == 1 && logical[duplicated[0]].size() == 2 && orphans.empty()) ||
                (duplicated.empty() && orphans.size() == 1))) {
        // one index was corrupted into another (or out of range): try each way back
        const std::size_t hole = missing[0];
        if (duplicated.empty()) {
            logical[hole].push_back(orphans[0]);
            options.emplace_back();
            for (auto& l : logical)
                options.back().push_back(&l.front());
        } else {
            const std::size_t dup = duplicated[0];
            for (std::size_t keep = 0; keep < 2; ++keep) {
                std::vector<const std::vector<Symbol>*> pick;
                for (std::size_t i = 0; i < M; ++i) {
                    if (i == dup)
                        pick.push_back(&logical[dup][keep]);
                    else if (i == hole)
                        pick.push_back(&logical[dup][1 - keep]);
                    else
                        pick.push_back(&logical[i].front());
                }
                options.push_back(std::move(pick));
            }
        }
    } else {
        throw SlicedDecodeError("missing indices [" + list_str(missing) + "], duplicated indices [" +
                                    list_str(duplicated) + "]",
                                missing, duplicated);
    }

    std::optional<bch::BchCode::Decoded> best;
    std::size_t best_count = 0;
    for (const auto& pick : options) {
        auto dec = assemble(pick);
        if (!dec)
            continue;
        if (!best || dec->corrected < best->corrected) {
            best = std::move(dec);
            best_count = 1;
        } else if (dec->corrected == best->corrected) {
            ++best_count;
        }
    }
    if (!best)
        throw DecodeError("payload code could not correct the received payload");
    if (best_count > 1)
        throw SlicedDecodeError("payloads do not disambiguate the colliding index", missing, duplicated,
                                "ambiguous");
    return Seq(std::move(best->message), alphabets::binary());
}

// --- data as index ---------------------------------------------------------

double DataIndexedLayout::redundancy() const
{
    return set_redundancy(static_cast<double>(data_bits), M, L);
}

namespace {

std::optional<DataIndexedLayout> try_layout(std::size_t M, std::size_t L, std::size_t t, std::size_t p)
{
    const auto& pool = lexicode(p, 2 * t + 1);
    if (pool.size() < M)
        return std::nullopt;
    DataIndexedLayout lay;
    lay.M = M;
    lay.L = L;
    lay.t = t;
    lay.p = p;
    lay.family_size = binomial(BigUint(pool.size()), M);
    lay.index_bits = static_cast<std::size_t>(boost::multiprecision::msb(lay.family_size));
    lay.payload_bits = M * (L - p);
    if (lay.payload_bits > 0) {
        try {
            lay.parity_bits = bch::BchCode(lay.payload_bits, t).parity_bits();
        } catch (const InvalidArgument&) {
            return std::nullopt;
        }
    }
    lay.data_bits = lay.index_bits + lay.payload_bits - lay.parity_bits;
    return lay;
}

std::size_t smallest_prefix(std::size_t M) { return std::max<std::size_t>(1, ceil_log2(M)); }

} // namespace

DataIndexedLayout data_indexed_layout(std::size_t M, std::size_t L, std::size_t t, std::optional<std::size_t> p)
{
    check_shape(M, L);
    if (p) {
        if (*p == 0 || *p > L)
            throw InvalidArgument("prefix length must be in [1, L]");
        auto lay = try_layout(M, L, t, *p);
        if (!lay)
            throw InvalidArgument("no distance-" + std::to_string(2 * t + 1) + " prefix family for M = " +
                                  std::to_string(M) + " at p = " + std::to_string(*p));
        return *lay;
    }
    std::optional<DataIndexedLayout> best;
    for (std::size_t q = smallest_prefix(M); q <= std::min(L, kMaxPrefixBits); ++q) {
        auto lay = try_layout(M, L, t, q);
        if (lay && (!best || lay->data_bits > best->data_bits))
            best = std::move(lay);
    }
    if (!best)
        throw InvalidArgument("no prefix length admits a distance-" + std::to_string(2 * t + 1) +
                              " family of " + std::to_string(M) + " prefixes");
    return *best;
}

SlicedCodeword encode_data_indexed(const Seq& data, std::size_t M, std::size_t L, std::size_t t)
{
    require_binary(data, "data");
    const auto lay = data_indexed_layout(M, L, t);
    if (data.size() != lay.data_bits)
        throw InvalidArgument("data-indexed data must have " + std::to_string(lay.data_bits) + " bits");
    const auto family = greedy_prefix_family(M, lay.p, 2 * t + 1);
    const auto prefixes = family.set(bits_to_big(data.vec(), 0, lay.index_bits));
    std::vector<Symbol> payload(data.vec().begin() + static_cast<std::ptrdiff_t>(lay.index_bits),
                                data.vec().end());
    if (lay.payload_bits > 0)
        payload = bch::BchCode(lay.payload_bits, t).encode(payload);
    const std::size_t chunk = L - lay.p;
    std::vector<Seq> seqs;
    for (std::size_t i = 0; i < M; ++i) {
        std::vector<Symbol> s;
        append_word(s, prefixes[i], lay.p);
        s.insert(s.end(), payload.begin() + static_cast<std::ptrdiff_t>(i * chunk),
                 payload.begin() + static_cast<std::ptrdiff_t>((i + 1) * chunk));
        seqs.emplace_back(std::move(s), alphabets::binary());
    }
    return SlicedCodeword::from(std::move(seqs), L);
}

Seq decode_data_indexed(const SlicedRead& reads, std::size_t M, std::size_t L, std::size_t t)
{
    const auto lay = data_indexed_layout(M, L, t);
    const auto family = greedy_prefix_family(M, lay.p, 2 * t + 1);
    const auto& pool = *family.pool;
    if (reads.reads.size() != M)
        throw SlicedDecodeError("expected " + std::to_string(M) + " reads, got " +
                                    std::to_string(reads.reads.size()),
                                {}, {});

    std::vector<std::pair<std::size_t, std::vector<Symbol>>> matched;
    for (const auto& read : reads.reads) {
        if (read.size() != L || read.q() != 2)
            throw DecodeError("read has length " + std::to_string(read.size()) + ", expected " +
                              std::to_string(L), "framing");
        const auto k = nearest(pool, pool.size(), read_word(read.vec(), 0, lay.p), t);
        if (!k)
            throw DecodeError("prefix " + read.slice(0, lay.p).str() + " has no unique nearest prefix",
                              "ambiguous");
        matched.emplace_back(*k, std::vector<Symbol>(read.vec().begin() + static_cast<std::ptrdiff_t>(lay.p),
                                                     read.vec().end()));
    }
    std::sort(matched.begin(), matched.end());
    std::vector<std::uint32_t> prefixes;
    std::vector<std::size_t> duplicated;
    for (std::size_t i = 0; i < M; ++i) {
        prefixes.push_back(pool[matched[i].first]);
        if (i > 0 && matched[i].first == matched[i - 1].first)
            duplicated.push_back(matched[i].first);
    }
    if (!duplicated.empty())
        throw SlicedDecodeError("two reads match the same prefix", {}, duplicated, "ambiguous");

    const BigUint rank = family.rank(prefixes);
    if ((rank >> lay.index_bits) != 0)
        throw DecodeError("prefix set lies outside the data-carrying part of the family");

    std::vector<Symbol> out;
    append_big(out, rank, lay.index_bits);
    if (lay.payload_bits > 0) {
        std::vector<Symbol> word;
        for (auto& [k, part] : matched)
            word.insert(word.end(), part.begin(), part.end());
        auto dec = bch::BchCode(lay.payload_bits, t).decode(std::move(word));
        if (!dec)
            throw DecodeError("payload code could not correct the received payload");
        out.insert(out.end(), dec->message.begin(), dec->message.end());
    }
    return Seq(std::move(out), alphabets::binary());
}

// --- vial files ----------------------------------------------------------

void write_vial(std::ostream& os, const Vial& vial)
{
    os << vial.M << ' ' << vial.L << '\n';
    for (const auto& s : vial.sequences)
        os << s.str() << '\n';
}

Vial read_vial(std::istream& is)
{
    Vial v;
    std::string line;
    while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header(line);
    if (!(header >> v.M >> v.L))
        throw InvalidArgument("vial header must be 'M L'");
    while (std::getline(is, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        v.sequences.push_back(Seq::binary(std::string_view(line).substr(b, e - b + 1)));
    }
    return v;
}

} // namespace dnacode::sliced
