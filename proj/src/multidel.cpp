#include "dnacode/multidel.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "dnacode/balls.hpp"
#include "dnacode/error.hpp"

namespace dnacode::multidel {

namespace {

constexpr std::size_t kNoOne = std::numeric_limits<std::size_t>::max();

void require_binary(const Seq& s, const char* what)
{
    if (s.q() != 2)
        throw InvalidArgument(std::string(what) + " expects a binary sequence");
}

void require_t(std::size_t t)
{
    if (t == 0)
        throw InvalidArgument("deletion budget t must be positive");
}

BigUint pow_big(std::size_t base, std::size_t e)
{
    BigUint r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= base;
    return r;
}

/// Checksum weights reduced modulo their moduli, for a fixed (n, t).
/// Int is std::uint64_t when every modulus is below 2^63, BigUint otherwise.
template <typename Int>
struct SumTable {
    std::size_t n = 0;
    std::size_t count = 0;
    std::vector<Int> moduli;
    std::vector<Int> weights; // weights[i * count + p] = w_p(i + 1) mod m_p

    Int add(Int a, const Int& b, std::size_t p) const
    {
        a += b;
        if (a >= moduli[p])
            a -= moduli[p];
        return a;
    }
};

template <typename Int>
Int convert(const BigUint& v)
{
    if constexpr (std::is_same_v<Int, BigUint>)
        return v;
    else
        return v.template convert_to<Int>();
}

template <typename Int>
SumTable<Int> make_table(std::size_t n, std::size_t t)
{
    SumTable<Int> table;
    table.n = n;
    table.count = sum_count(t);
    std::vector<BigUint> big_moduli;
    for (std::size_t p = 0; p < table.count; ++p) {
        big_moduli.push_back(sum_modulus(t, n, p));
        table.moduli.push_back(convert<Int>(big_moduli.back()));
    }
    table.weights.resize(n * table.count);
    std::vector<BigUint> prefix(table.count, 0);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t p = 0; p < table.count; ++p) {
            if (p == 0) {
                table.weights[(i - 1) * table.count] = convert<Int>(BigUint(1) % big_moduli[0]);
                continue;
            }
            prefix[p] += pow_big(i, p);
            prefix[p] %= big_moduli[p];
            table.weights[(i - 1) * table.count + p] = convert<Int>(prefix[p]);
        }
    return table;
}

bool fits_u64(std::size_t n, std::size_t t)
{
    const BigUint limit = BigUint(1) << 63;
    for (std::size_t p = 0; p < sum_count(t); ++p)
        if (sum_modulus(t, n, p) >= limit)
            return false;
    return true;
}

/// Depth-first enumeration of the length-n supersequences of y, each generated
/// once through its leftmost embedding of y, with running checksums. Once all
/// insertions are placed the remaining suffix of y is forced, so its checksum
/// contribution comes from a precomputed table.
template <typename Int>
class CandidateSearch {
public:
    CandidateSearch(const SumTable<Int>& table, const std::vector<Symbol>& y,
                    const std::vector<Int>& target, std::size_t gap, std::size_t limit)
        : table_(table), y_(y), target_(target), gap_(gap), limit_(limit),
          insertions_(table.n - y.size())
    {
        const std::size_t m = y.size();
        const std::size_t c = table.count;
        suffix_.assign((m + 1) * c, Int(0));
        for (std::size_t j = m; j-- > 0;)
            for (std::size_t p = 0; p < c; ++p) {
                Int v = suffix_[(j + 1) * c + p];
                if (y[j])
                    v = table.add(v, table.weights[(j + insertions_) * c + p], p);
                suffix_[j * c + p] = v;
            }
        // lead_zeros_[j]: zeros before the first 1 of y[j..], kNoOne if none;
        // suffix_ok_[j]: y[j..] satisfies the gap on its own.
        lead_zeros_.assign(m + 1, kNoOne);
        suffix_ok_.assign(m + 1, true);
        for (std::size_t j = m; j-- > 0;) {
            if (y[j]) {
                lead_zeros_[j] = 0;
                const std::size_t next = lead_zeros_[j + 1];
                suffix_ok_[j] = suffix_ok_[j + 1] && (next == kNoOne || next >= gap);
            } else {
                lead_zeros_[j] = lead_zeros_[j + 1] == kNoOne ? kNoOne : lead_zeros_[j + 1] + 1;
                suffix_ok_[j] = suffix_ok_[j + 1];
            }
        }
        partial_.assign((table.n + 1) * c, Int(0));
        prefix_.reserve(table.n);
    }

    std::vector<std::vector<Symbol>> run()
    {
        visit(0, 0, kNoOne);
        return std::move(found_);
    }

private:
    // `zeros` counts 0's since the last 1, kNoOne before the first 1.
    void visit(std::size_t j, std::size_t inserted, std::size_t zeros)
    {
        if (found_.size() >= limit_)
            return;
        const std::size_t pos = prefix_.size();
        const std::size_t c = table_.count;
        if (inserted == insertions_) {
            if (!suffix_ok_[j])
                return;
            const std::size_t lead = lead_zeros_[j];
            if (lead != kNoOne && zeros != kNoOne && zeros + lead < gap_)
                return;
            for (std::size_t p = 0; p < c; ++p)
                if (table_.add(partial_[pos * c + p], suffix_[j * c + p], p) != target_[p])
                    return;
            auto z = prefix_;
            z.insert(z.end(), y_.begin() + static_cast<std::ptrdiff_t>(j), y_.end());
            found_.push_back(std::move(z));
            return;
        }
        if (j < y_.size())
            step(y_[j], j + 1, inserted, zeros);
        for (Symbol s = 0; s < 2; ++s)
            if (j == y_.size() || s != y_[j])
                step(s, j, inserted + 1, zeros);
    }

    void step(Symbol s, std::size_t next_j, std::size_t inserted, std::size_t zeros)
    {
        const std::size_t pos = prefix_.size();
        const std::size_t c = table_.count;
        if (s == 1 && zeros != kNoOne && zeros < gap_)
            return;
        for (std::size_t p = 0; p < c; ++p) {
            Int v = partial_[pos * c + p];
            if (s)
                v = table_.add(v, table_.weights[pos * c + p], p);
            partial_[(pos + 1) * c + p] = v;
        }
        prefix_.push_back(s);
        visit(next_j, inserted, s ? 0 : (zeros == kNoOne ? kNoOne : zeros + 1));
        prefix_.pop_back();
    }

    const SumTable<Int>& table_;
    const std::vector<Symbol>& y_;
    const std::vector<Int>& target_;
    std::size_t gap_;
    std::size_t limit_;
    std::size_t insertions_;
    std::vector<Int> suffix_;
    std::vector<std::size_t> lead_zeros_;
    std::vector<bool> suffix_ok_;
    std::vector<Int> partial_;
    std::vector<Symbol> prefix_;
    std::vector<std::vector<Symbol>> found_;
};

template <typename Int>
std::vector<std::vector<Symbol>> search(const Seq& y, std::size_t n, const WeightedSums& sums,
                                        std::size_t t, std::size_t limit)
{
    const auto table = make_table<Int>(n, t);
    std::vector<Int> target;
    for (const auto& r : sums.residues)
        target.push_back(convert<Int>(r));
    return CandidateSearch<Int>(table, y.vec(), target, gap_for(t), limit).run();
}

} // namespace

std::size_t gap_for(std::size_t t)
{
    require_t(t);
    return t - 1;
}

std::size_t sum_count(std::size_t t)
{
    require_t(t);
    return t == 2 ? 3 : 6 * t + 1;
}

BigUint sum_modulus(std::size_t t, std::size_t n, std::size_t p)
{
    require_t(t);
    if (n == 0)
        throw InvalidArgument("checksum moduli need n >= 1");
    const BigUint scale = t == 2 ? BigUint(2) : BigUint(3 * t);
    return scale * pow_big(n, p + 1);
}

BigUint sum_weight(std::size_t i, std::size_t p)
{
    if (i == 0)
        throw InvalidArgument("positions are 1-based");
    if (p == 0)
        return 1;
    BigUint w = 0;
    for (std::size_t j = 1; j <= i; ++j)
        w += pow_big(j, p);
    return w;
}

bool satisfies_gap(const Seq& c, std::size_t gap) noexcept
{
    std::size_t zeros = kNoOne;
    for (Symbol b : c.symbols()) {
        if (b) {
            if (zeros != kNoOne && zeros < gap)
                return false;
            zeros = 0;
        } else if (zeros != kNoOne) {
            ++zeros;
        }
    }
    return true;
}

WeightedSums weighted_sums(const Seq& c, std::size_t t)
{
    require_binary(c, "weighted_sums");
    if (!satisfies_gap(c, gap_for(t)))
        throw InvalidArgument("sequence " + c.str() + " violates the gap constraint for t = " +
                              std::to_string(t));
    const std::size_t n = c.size();
    const std::size_t count = sum_count(t);
    WeightedSums out{t, n, std::vector<BigUint>(count, 0), {}};
    for (std::size_t p = 0; p < count; ++p)
        out.moduli.push_back(sum_modulus(t, n, p));
    std::vector<BigUint> prefix(count, 0);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t p = 0; p < count; ++p) {
            const BigUint w = p == 0 ? BigUint(1) : (prefix[p] += pow_big(i, p));
            if (c[i - 1])
                out.residues[p] = (out.residues[p] + w) % out.moduli[p];
        }
    return out;
}

Seq indicator10(const Seq& c)
{
    require_binary(c, "indicator10");
    const std::size_t n = c.size();
    std::vector<Symbol> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol next = i + 1 < n ? c[i + 1] : 1;
        out[i] = c[i] == 1 && next == 0;
    }
    return c.with(std::move(out));
}

Seq indicator01(const Seq& c)
{
    require_binary(c, "indicator01");
    const std::size_t n = c.size();
    std::vector<Symbol> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol next = i + 1 < n ? c[i + 1] : 1;
        out[i] = c[i] == 0 && next == 1;
    }
    return c.with(std::move(out));
}

Seq reconstruct_from_indicators(const Seq& ind10, const Seq& ind01)
{
    require_binary(ind10, "reconstruct_from_indicators");
    require_binary(ind01, "reconstruct_from_indicators");
    if (ind10.size() != ind01.size())
        throw DecodeError("indicator vectors differ in length", "inconsistent");
    const std::size_t n = ind10.size();
    if (n == 0)
        return ind10;
    if (ind10[n - 1])
        throw DecodeError("indicator10 cannot mark the last position", "inconsistent");
    // walk right to left: the boundary c_{n+1} = 1 fixes c_n through ind01
    std::vector<Symbol> c(n);
    c[n - 1] = ind01[n - 1] ? 0 : 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        if (ind10[i] && ind01[i])
            throw DecodeError("both indicators mark position " + std::to_string(i + 1),
                              "inconsistent");
        if (ind10[i]) {
            if (c[i + 1] != 0)
                throw DecodeError("indicator10 marks a 1->0 step before a 1", "inconsistent");
            c[i] = 1;
        } else if (ind01[i]) {
            if (c[i + 1] != 1)
                throw DecodeError("indicator01 marks a 0->1 step before a 0", "inconsistent");
            c[i] = 0;
        } else {
            c[i] = c[i + 1];
        }
    }
    return ind10.with(std::move(c));
}

std::vector<Seq> constrained_candidates(const Seq& y, std::size_t n, const WeightedSums& sums,
                                        std::size_t t, std::size_t limit)
{
    require_binary(y, "constrained_candidates");
    if (sums.t != t || sums.n != n || sums.residues.size() != sum_count(t))
        throw InvalidArgument("checksums were computed for different (n, t)");
    if (y.size() > n || n - y.size() > t)
        throw DecodeError("received length " + std::to_string(y.size()) + " is outside [n - t, n]",
                          "framing");
    auto words = fits_u64(n, t) ? search<std::uint64_t>(y, n, sums, t, limit)
                                : search<BigUint>(y, n, sums, t, limit);
    std::vector<Seq> out;
    for (auto& w : words)
        out.push_back(y.with(std::move(w)));
    return out;
}

Seq decode_constrained(const Seq& y, std::size_t n, const WeightedSums& sums, std::size_t t)
{
    auto cands = constrained_candidates(y, n, sums, t, 2);
    if (cands.empty())
        throw DecodeError("no constrained codeword matches the checksums");
    if (cands.size() > 1)
        throw DecodeError("checksums match several codewords: " + cands[0].str() + ", " +
                              cands[1].str(),
                          "ambiguous");
    return cands.front();
}

Seq repetition_del_encode(const Seq& bits, std::size_t t)
{
    require_binary(bits, "repetition_del_encode");
    std::vector<Symbol> out;
    out.reserve(bits.size() * (t + 1));
    for (Symbol b : bits.symbols())
        out.insert(out.end(), t + 1, b);
    return bits.with(std::move(out));
}

Seq repetition_del_decode(const Seq& noisy, std::size_t t)
{
    require_binary(noisy, "repetition_del_decode");
    const std::size_t r = t + 1;
    std::vector<Symbol> out;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < noisy.size();) {
        std::size_t j = i;
        while (j < noisy.size() && noisy[j] == noisy[i])
            ++j;
        const std::size_t len = j - i;
        const std::size_t bits = (len + r - 1) / r;
        missing += bits * r - len;
        out.insert(out.end(), bits, noisy[i]);
        i = j;
    }
    if (missing > t)
        throw DecodeError("runs are short by " + std::to_string(missing) +
                              " symbols, more than t = " + std::to_string(t),
                          "excess_errors");
    return noisy.with(std::move(out));
}

std::size_t residue_width(const BigUint& modulus)
{
    if (modulus <= 1)
        return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(BigUint(modulus - 1))) + 1;
}

Seq serialize_sums(const WeightedSums& sums)
{
    std::vector<Symbol> bits;
    for (std::size_t p = 0; p < sums.residues.size(); ++p) {
        const std::size_t w = residue_width(sums.moduli[p]);
        for (std::size_t b = w; b-- > 0;)
            bits.push_back(boost::multiprecision::bit_test(sums.residues[p], b) ? 1 : 0);
    }
    return Seq(std::move(bits), alphabets::binary());
}

WeightedSums deserialize_sums(const Seq& bits, std::size_t t, std::size_t n)
{
    require_binary(bits, "deserialize_sums");
    WeightedSums out{t, n, {}, {}};
    std::size_t at = 0;
    for (std::size_t p = 0; p < sum_count(t); ++p) {
        out.moduli.push_back(sum_modulus(t, n, p));
        const std::size_t w = residue_width(out.moduli.back());
        if (at + w > bits.size())
            throw DecodeError("checksum block is too short", "framing");
        BigUint v = 0;
        for (std::size_t b = 0; b < w; ++b)
            v = (v << 1) | bits[at++];
        out.residues.push_back(v);
    }
    if (at != bits.size())
        throw DecodeError("checksum block has trailing bits", "framing");
    return out;
}

TDelLayout t_del_layout(std::size_t n, std::size_t t)
{
    require_t(t);
    if (t > 2)
        throw InvalidArgument("the indicator pipeline supports t = 1 or t = 2");
    TDelLayout layout{n, t, 0, 0, n};
    if (n == 0)
        return layout;
    for (std::size_t p = 0; p < sum_count(t); ++p)
        layout.checksum_bits += 2 * residue_width(sum_modulus(t, n, p));
    layout.tail_symbols = layout.checksum_bits * (t + 1);
    layout.codeword_length = n + layout.tail_symbols;
    return layout;
}

Seq encode_t_del(const Seq& data, std::size_t t)
{
    require_binary(data, "encode_t_del");
    const auto layout = t_del_layout(data.size(), t);
    if (layout.n == 0)
        return data;
    // indicators never hold two adjacent 1's, which is the gap t = 2 needs
    const auto s10 = weighted_sums(indicator10(data), t);
    const auto s01 = weighted_sums(indicator01(data), t);
    const Seq tail = serialize_sums(s10).concat(serialize_sums(s01));
    return data.concat(repetition_del_encode(tail, t));
}

Seq decode_t_del(const Seq& noisy, std::size_t t, std::size_t n, TDelDiagnostics* diagnostics)
{
    require_binary(noisy, "decode_t_del");
    const auto layout = t_del_layout(n, t);
    const std::size_t total = layout.codeword_length;
    if (noisy.size() > total || noisy.size() + t < total)
        throw DecodeError("received length " + std::to_string(noisy.size()) +
                              " is incompatible with codeword length " + std::to_string(total),
                          "framing");
    if (n == 0)
        return noisy;

    // Recover the checksum bits from the end. The leftmost tail run may merge
    // with trailing data symbols of the same value; only the needed part of
    // it is consumed.
    const std::size_t r = t + 1;
    const std::size_t want = layout.checksum_bits;
    std::vector<Symbol> tail_rev;
    std::size_t consumed = 0;
    std::size_t deficiency = 0;
    std::size_t end = noisy.size();
    while (tail_rev.size() < want) {
        if (end == 0)
            throw DecodeError("ran out of symbols while reading the checksum tail", "framing");
        std::size_t begin = end;
        while (begin > 0 && noisy[begin - 1] == noisy[end - 1])
            --begin;
        const std::size_t len = end - begin;
        const std::size_t need = want - tail_rev.size();
        std::size_t bits = (len + r - 1) / r;
        std::size_t used = len;
        if (bits > need) {
            bits = need;
            used = need * r;
        }
        deficiency += bits * r - used;
        tail_rev.insert(tail_rev.end(), bits, noisy[end - 1]);
        consumed += used;
        end -= used;
        if (used < len)
            break;
    }
    if (deficiency > t)
        throw DecodeError("checksum tail lost more than t symbols", "framing");

    std::vector<Symbol> tail_bits(tail_rev.rbegin(), tail_rev.rend());
    const Seq tail(tail_bits, alphabets::binary());
    const std::size_t half = want / 2;
    const auto s10 = deserialize_sums(tail.slice(0, half), t, n);
    const auto s01 = deserialize_sums(tail.slice(half, half), t, n);

    const Seq y = noisy.slice(0, noisy.size() - consumed);
    if (y.size() > n || n - y.size() > t)
        throw DecodeError("data part has length " + std::to_string(y.size()) +
                              ", outside [n - t, n]",
                          "framing");

    const auto c10 = constrained_candidates(indicator10(y), n, s10, t, 2);
    const auto c01 = constrained_candidates(indicator01(y), n, s01, t, 2);
    if (diagnostics)
        *diagnostics = {n - y.size(), deficiency, c10.size(), c01.size()};
    if (c10.size() != 1 || c01.size() != 1)
        throw DecodeError("indicator decoding found " + std::to_string(c10.size()) + " / " +
                              std::to_string(c01.size()) + " candidates",
                          c10.empty() || c01.empty() ? "uncorrectable" : "ambiguous");

    Seq c = reconstruct_from_indicators(c10.front(), c01.front());
    if (!is_subsequence(y.symbols(), c.symbols()))
        throw DecodeError("reconstructed word does not contain the received data", "inconsistent");
    return c;
}

} // namespace dnacode::multidel
