#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace dnacode {

/// Seeded generator with platform-independent sampling. The standard
/// distributions are implementation-defined, so bounded draws are done here
/// by rejection on the raw 64-bit engine output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    /// k distinct indices from [0, n), in draw order.
    std::vector<std::size_t> sample(std::size_t n, std::size_t k);

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

/// Per-trial seed for batch runs: seed + trial index.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept
{
    return seed + trial;
}

} // namespace dnacode
