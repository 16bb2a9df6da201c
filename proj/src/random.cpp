#include "dnacode/random.hpp"

#include <limits>
#include <numeric>

#include "dnacode/error.hpp"

namespace dnacode {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidArgument("Rng::below requires a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

std::vector<std::size_t> Rng::sample(std::size_t n, std::size_t k)
{
    if (k > n)
        throw InvalidArgument("cannot sample more items than available");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    // partial Fisher-Yates
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + static_cast<std::size_t>(below(n - i))]);
    pool.resize(k);
    return pool;
}

} // namespace dnacode
