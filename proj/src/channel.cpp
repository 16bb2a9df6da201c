#include "dnacode/channel.hpp"

#include <algorithm>
#include <string>

#include "dnacode/error.hpp"

namespace dnacode {

void validate(const ChannelConfig& cfg, std::size_t n, std::size_t q)
{
    if (cfg.deletions > n)
        throw InvalidArgument("channel asks for " + std::to_string(cfg.deletions) +
                              " deletions from a word of length " + std::to_string(n));
    if (cfg.substitutions > n - cfg.deletions)
        throw InvalidArgument("more substitutions than surviving symbols");
    if (cfg.substitutions > 0 && q < 2)
        throw InvalidArgument("substitutions need at least two symbols");
    for (double r : {cfg.deletion_rate, cfg.insertion_rate, cfg.substitution_rate})
        if (!(r >= 0.0 && r <= 1.0))
            throw InvalidArgument("channel rates must lie in [0, 1]");
}

Seq apply_channel(const Seq& x, const ChannelConfig& cfg, Rng& rng)
{
    const std::size_t q = x.q();
    validate(cfg, x.size(), q);
    if (cfg.is_identity())
        return x;

    std::vector<Symbol> w = x.vec();

    // exact deletions: remove a uniformly chosen set of positions
    if (cfg.deletions > 0) {
        auto gone = rng.sample(w.size(), cfg.deletions);
        std::vector<bool> drop(w.size(), false);
        for (auto i : gone)
            drop[i] = true;
        std::vector<Symbol> kept;
        kept.reserve(w.size() - cfg.deletions);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!drop[i])
                kept.push_back(w[i]);
        w = std::move(kept);
    }

    auto other_symbol = [&](Symbol s) {
        auto r = static_cast<Symbol>(rng.below(q - 1));
        return static_cast<Symbol>(r >= s ? r + 1 : r);
    };

    for (auto i : rng.sample(w.size(), cfg.substitutions))
        w[i] = other_symbol(w[i]);

    for (std::size_t k = 0; k < cfg.insertions; ++k) {
        auto pos = static_cast<std::ptrdiff_t>(rng.below(w.size() + 1));
        w.insert(w.begin() + pos, static_cast<Symbol>(rng.below(q)));
    }

    if (cfg.deletion_rate > 0.0 || cfg.substitution_rate > 0.0 || cfg.insertion_rate > 0.0) {
        std::vector<Symbol> out;
        out.reserve(w.size() + 4);
        if (rng.bernoulli(cfg.insertion_rate))
            out.push_back(static_cast<Symbol>(rng.below(q)));
        for (Symbol s : w) {
            if (!rng.bernoulli(cfg.deletion_rate))
                out.push_back(q > 1 && rng.bernoulli(cfg.substitution_rate) ? other_symbol(s) : s);
            if (rng.bernoulli(cfg.insertion_rate))
                out.push_back(static_cast<Symbol>(rng.below(q)));
        }
        w = std::move(out);
    }
    return x.with(std::move(w));
}

Seq apply_channel(const Seq& x, const ChannelConfig& cfg)
{
    Rng rng(cfg.seed);
    return apply_channel(x, cfg, rng);
}

} // namespace dnacode
