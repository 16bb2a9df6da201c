#include "dnacode/vt.hpp"

#include <algorithm>
#include <string>

#include "dnacode/error.hpp"

namespace dnacode::vt {

namespace {

void require_binary(const Seq& s)
{
    if (s.q() != 2)
        throw InvalidArgument("VT codes are binary");
}

void require_params(const VtParams& p)
{
    if (p.n == 0)
        throw InvalidArgument("VT length n must be positive");
    if (p.a > p.n)
        throw InvalidArgument("VT residue a must lie in [0, n]");
}

bool is_power_of_two(std::size_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

namespace detail {

std::size_t weighted_sum(std::span<const Symbol> c, std::size_t modulus)
{
    std::size_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i])
            s = (s + (i + 1)) % modulus;
    return s;
}

Seq decode_with_modulus(const Seq& y, std::size_t n, std::size_t a, std::size_t modulus)
{
    require_binary(y);
    if (y.size() == n) {
        if (weighted_sum(y.symbols(), modulus) != a)
            throw DecodeError("length-n word has the wrong VT residue");
        return y;
    }
    if (y.size() + 1 != n)
        throw InvalidArgument("VT decoder expects length " + std::to_string(n - 1) + " or " +
                              std::to_string(n) + ", got " + std::to_string(y.size()));

    const auto& bits = y.vec();
    const std::size_t ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    const std::size_t s = weighted_sum(bits, modulus);
    const std::size_t deficiency = (a + modulus - s) % modulus;

    std::size_t pos = 0;
    Symbol restored = 0;
    if (deficiency <= ones) {
        // a 0 was lost: it had `deficiency` ones to its right
        pos = bits.size();
        std::size_t right = 0;
        while (right < deficiency) {
            --pos;
            right += bits[pos];
        }
    } else {
        // a 1 was lost: it had deficiency - ones - 1 zeros to its left
        restored = 1;
        const std::size_t zeros_left = deficiency - ones - 1;
        std::size_t zeros = 0;
        while (zeros < zeros_left) {
            if (pos == bits.size())
                throw DecodeError("no single insertion reaches the requested residue");
            zeros += bits[pos] == 0;
            ++pos;
        }
    }
    Seq c = y.inserted(pos, restored);
    if (weighted_sum(c.symbols(), modulus) != a)
        throw DecodeError("no single insertion reaches the requested residue");
    return c;
}

std::vector<Seq> candidates_with_modulus(const Seq& y, std::size_t n, std::size_t a,
                                         std::size_t modulus)
{
    require_binary(y);
    std::set<Seq> seen;
    if (y.size() == n) {
        seen.insert(y);
    } else if (y.size() + 1 == n) {
        for (std::size_t i = 0; i <= y.size(); ++i)
            for (Symbol b = 0; b < 2; ++b)
                seen.insert(y.inserted(i, b));
    } else {
        throw InvalidArgument("VT candidates need length n-1 or n");
    }
    std::vector<Seq> out;
    for (const auto& c : seen)
        if (weighted_sum(c.symbols(), modulus) == a)
            out.push_back(c);
    return out;
}

} // namespace detail

std::size_t vt_syndrome(const Seq& c, const VtParams& params)
{
    require_binary(c);
    require_params(params);
    if (c.size() != params.n)
        throw InvalidArgument("VT syndrome: length " + std::to_string(c.size()) +
                              " does not match n = " + std::to_string(params.n));
    return detail::weighted_sum(c.symbols(), params.modulus());
}

Seq vt_decode(const Seq& y, const VtParams& params)
{
    require_params(params);
    return detail::decode_with_modulus(y, params.n, params.a, params.modulus());
}

std::vector<Seq> vt_decode_candidates(const Seq& y, const VtParams& params)
{
    require_params(params);
    return detail::candidates_with_modulus(y, params.n, params.a, params.modulus());
}

std::set<Seq> vt_codebook(const VtParams& params)
{
    require_params(params);
    if (params.n > kCodebookMaxN)
        throw BoundExceeded("VT codebook enumeration is limited to n <= " +
                            std::to_string(kCodebookMaxN));
    std::set<Seq> book;
    const auto bin = alphabets::binary();
    std::vector<Symbol> w(params.n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << params.n); ++mask) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < params.n; ++i) {
            w[i] = static_cast<Symbol>(mask >> i & 1);
            if (w[i])
                s += i + 1;
        }
        if (s % params.modulus() == params.a)
            book.insert(Seq(w, bin));
    }
    return book;
}

std::vector<std::size_t> vt_check_positions(std::size_t n)
{
    std::vector<std::size_t> pos;
    for (std::size_t p = 1; p <= n; p <<= 1)
        pos.push_back(p);
    return pos;
}

std::size_t vt_data_length(std::size_t n) { return n - vt_check_positions(n).size(); }

Seq vt_encode(const Seq& data, std::size_t n, std::size_t a)
{
    require_binary(data);
    require_params({n, a});
    const std::size_t k = vt_data_length(n);
    if (data.size() != k)
        throw InvalidArgument("VT encoder for n = " + std::to_string(n) + " takes " +
                              std::to_string(k) + " data bits, got " + std::to_string(data.size()));

    std::vector<Symbol> c(n, 0);
    std::size_t d = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (!is_power_of_two(i))
            c[i - 1] = data[d++];

    const std::size_t modulus = n + 1;
    const std::size_t deficiency = (a + modulus - detail::weighted_sum(c, modulus)) % modulus;
    // deficiency <= n < 2^(#check bits), so its binary expansion selects the check bits
    for (std::size_t p = 1; p <= n; p <<= 1)
        c[p - 1] = (deficiency & p) ? 1 : 0;
    return data.with(std::move(c));
}

Seq vt_extract(const Seq& codeword)
{
    require_binary(codeword);
    std::vector<Symbol> data;
    for (std::size_t i = 1; i <= codeword.size(); ++i)
        if (!is_power_of_two(i))
            data.push_back(codeword[i - 1]);
    return codeword.with(std::move(data));
}

} // namespace dnacode::vt
