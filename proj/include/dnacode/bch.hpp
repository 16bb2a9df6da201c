#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dnacode/seq.hpp"

namespace dnacode::bch {

/// Arithmetic in GF(2^m), 2 <= m <= 16, through exp/log tables.
class GaloisField {
public:
    explicit GaloisField(unsigned m);

    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return order_; } ///< 2^m - 1
    std::uint32_t alpha_pow(std::uint64_t e) const noexcept { return exp_[e % order_]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t log(std::uint32_t a) const { return log_.at(a); }

private:
    unsigned m_;
    std::uint32_t order_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Narrow-sense binary BCH code correcting `t` bit errors, shortened to
/// `length` bits. Codeword bit i is the coefficient of x^i; bits
/// [0, parity_bits) carry the parity, the rest the message. With t = 0 the
/// code is the identity.
class BchCode {
public:
    BchCode(std::size_t length, std::size_t t);

    std::size_t length() const noexcept { return length_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t parity_bits() const noexcept { return generator_.empty() ? 0 : generator_.size() - 1; }
    std::size_t message_bits() const noexcept { return length_ - parity_bits(); }

    std::vector<Symbol> encode(const std::vector<Symbol>& message) const;

    struct Decoded {
        std::vector<Symbol> message;
        std::size_t corrected = 0;
    };
    /// nullopt when the error pattern is detected as uncorrectable.
    std::optional<Decoded> decode(std::vector<Symbol> word) const;

private:
    std::size_t length_;
    std::size_t t_;
    std::optional<GaloisField> field_;
    std::vector<Symbol> generator_; // coefficients, low degree first
};

} // namespace dnacode::bch
