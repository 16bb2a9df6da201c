#include "dnacode/bch.hpp"

#include <algorithm>
#include <set>

#include "dnacode/error.hpp"

namespace dnacode::bch {

namespace {

// primitive polynomials including the x^m term, indexed by m
constexpr std::uint32_t kPrimitive[17] = {0,     0,     0x7,    0xB,    0x13,   0x25,
                                          0x43,  0x89,  0x11D,  0x211,  0x409,  0x805,
                                          0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

using Poly = std::vector<std::uint32_t>; // GF(2^m) coefficients, low degree first

Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] ^= f.mul(a[i], b[j]);
    return out;
}

} // namespace

GaloisField::GaloisField(unsigned m) : m_(m)
{
    if (m < 2 || m > 16)
        throw InvalidArgument("GF(2^m) supported for 2 <= m <= 16");
    order_ = (std::uint32_t{1} << m) - 1;
    exp_.assign(2 * order_, 0);
    log_.assign(order_ + 1, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (i > 0 && x == 1)
            throw Error("internal", "polynomial is not primitive");
        exp_[i] = exp_[i + order_] = x;
        log_[x] = i;
        x <<= 1;
        if (x & (std::uint32_t{1} << m))
            x ^= kPrimitive[m];
    }
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const noexcept
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::div(std::uint32_t a, std::uint32_t b) const
{
    if (b == 0)
        throw InvalidArgument("division by zero in GF(2^m)");
    if (a == 0)
        return 0;
    return exp_[log_[a] + order_ - log_[b]];
}

BchCode::BchCode(std::size_t length, std::size_t t) : length_(length), t_(t)
{
    if (t == 0)
        return;
    unsigned m = 2;
    while (m <= 16 && ((std::size_t{1} << m) - 1) < length)
        ++m;
    if (m > 16)
        throw InvalidArgument("BCH length exceeds 65535");
    field_.emplace(m);
    const auto& f = *field_;

    // generator = lcm of minimal polynomials of alpha^1 .. alpha^{2t}
    std::set<std::uint32_t> covered;
    Poly g{1};
    for (std::uint32_t i = 1; i <= 2 * t; ++i) {
        if (covered.count(i % f.order()))
            continue;
        Poly minimal{1};
        std::uint32_t e = i % f.order();
        do {
            covered.insert(e);
            minimal = poly_mul(f, minimal, Poly{f.alpha_pow(e), 1});
            e = static_cast<std::uint32_t>((std::uint64_t{e} * 2) % f.order());
        } while (!covered.count(e));
        g = poly_mul(f, g, minimal);
    }
    generator_.reserve(g.size());
    for (auto c : g) {
        if (c > 1)
            throw Error("internal", "generator has non-binary coefficient");
        generator_.push_back(static_cast<Symbol>(c));
    }
    if (parity_bits() > length_)
        throw InvalidArgument("BCH length " + std::to_string(length_) + " cannot hold " +
                              std::to_string(parity_bits()) + " parity bits");
}

std::vector<Symbol> BchCode::encode(const std::vector<Symbol>& message) const
{
    if (message.size() != message_bits())
        throw InvalidArgument("BCH message must have " + std::to_string(message_bits()) + " bits");
    const std::size_t r = parity_bits();
    std::vector<Symbol> word(length_, 0);
    std::copy(message.begin(), message.end(), word.begin() + static_cast<std::ptrdiff_t>(r));
    if (r == 0)
        return word;
    // remainder of m(x) x^r modulo g(x)
    std::vector<Symbol> rem(word);
    for (std::size_t i = length_; i-- > r;) {
        if (!rem[i])
            continue;
        for (std::size_t j = 0; j <= r; ++j)
            rem[i - r + j] ^= generator_[j];
    }
    for (std::size_t i = 0; i < r; ++i)
        word[i] = rem[i];
    return word;
}

std::optional<BchCode::Decoded> BchCode::decode(std::vector<Symbol> word) const
{
    if (word.size() != length_)
        throw InvalidArgument("BCH word must have " + std::to_string(length_) + " bits");
    const std::size_t r = parity_bits();
    Decoded out;
    if (t_ > 0) {
        const auto& f = *field_;
        std::vector<std::uint32_t> syn(2 * t_, 0);
        bool clean = true;
        for (std::size_t j = 0; j < syn.size(); ++j) {
            std::uint32_t s = 0;
            for (std::size_t i = 0; i < length_; ++i)
                if (word[i])
                    s ^= f.alpha_pow(static_cast<std::uint64_t>(j + 1) * i);
            syn[j] = s;
            clean = clean && s == 0;
        }
        if (!clean) {
            // Berlekamp-Massey
            Poly c{1}, b{1};
            std::size_t len = 0, shift = 1;
            std::uint32_t bd = 1;
            for (std::size_t n = 0; n < syn.size(); ++n) {
                std::uint32_t d = syn[n];
                for (std::size_t i = 1; i <= len && i < c.size(); ++i)
                    d ^= f.mul(c[i], syn[n - i]);
                if (d == 0) {
                    ++shift;
                    continue;
                }
                const std::uint32_t coef = f.div(d, bd);
                Poly next = c;
                if (next.size() < b.size() + shift)
                    next.resize(b.size() + shift, 0);
                for (std::size_t i = 0; i < b.size(); ++i)
                    next[i + shift] ^= f.mul(coef, b[i]);
                if (2 * len <= n) {
                    b = c;
                    len = n + 1 - len;
                    bd = d;
                    shift = 1;
                } else {
                    ++shift;
                }
                c = std::move(next);
            }
            while (c.size() > 1 && c.back() == 0)
                c.pop_back();
            if (c.size() - 1 != len || len > t_)
                return std::nullopt;
            // Chien search over the shortened positions
            std::size_t found = 0;
            for (std::size_t i = 0; i < length_; ++i) {
                const std::uint64_t inv = (f.order() - (i % f.order())) % f.order();
                std::uint32_t v = 0;
                for (std::size_t k = 0; k < c.size(); ++k)
                    v ^= f.mul(c[k], f.alpha_pow(inv * k));
                if (v == 0) {
                    word[i] ^= 1;
                    ++found;
                }
            }
            if (found != len)
                return std::nullopt;
            out.corrected = found;
        }
    }
    out.message.assign(word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
    return out;
}

} // namespace dnacode::bch
