#pragma once

#include <cstddef>
#include <cstdint>

#include "dnacode/random.hpp"
#include "dnacode/seq.hpp"

namespace dnacode {

/// Error budgets for the point channel. The exact counts are applied first
/// (deletions, then substitutions on surviving symbols, then insertions); the
/// per-symbol rates are applied afterwards to whatever remains.
struct ChannelConfig {
    std::size_t deletions = 0;
    std::size_t insertions = 0;
    std::size_t substitutions = 0;
    double deletion_rate = 0.0;
    double insertion_rate = 0.0;
    double substitution_rate = 0.0;
    std::uint64_t seed = 0;

    bool is_identity() const noexcept
    {
        return deletions == 0 && insertions == 0 && substitutions == 0 &&
               deletion_rate == 0.0 && insertion_rate == 0.0 && substitution_rate == 0.0;
    }
};

/// Throws InvalidArgument when the budgets cannot be met for a word of length n.
void validate(const ChannelConfig& cfg, std::size_t n, std::size_t q);

Seq apply_channel(const Seq& x, const ChannelConfig& cfg, Rng& rng);

/// Same as above with a generator seeded from cfg.seed.
Seq apply_channel(const Seq& x, const ChannelConfig& cfg);

} // namespace dnacode
