#include "dnacode/balls.hpp"

#include <algorithm>
#include <string>

#include "dnacode/error.hpp"

namespace dnacode {

std::string_view to_string(BallKind kind) noexcept
{
    switch (kind) {
    case BallKind::substitution: return "substitution";
    case BallKind::deletion: return "deletion";
    case BallKind::insertion: return "insertion";
    }
    return "?";
}

BallKind ball_kind_from_string(std::string_view name)
{
    if (name == "substitution" || name == "sub")
        return BallKind::substitution;
    if (name == "deletion" || name == "del")
        return BallKind::deletion;
    if (name == "insertion" || name == "ins")
        return BallKind::insertion;
    throw InvalidArgument("unknown ball kind '" + std::string(name) + "'");
}

namespace {

using Word = std::vector<Symbol>;

void substitute_from(Word& w, std::size_t start, std::size_t budget, std::size_t q,
                     std::set<Word>& out)
{
    out.insert(w);
    if (budget == 0)
        return;
    for (std::size_t i = start; i < w.size(); ++i) {
        const Symbol orig = w[i];
        for (Symbol s = 0; s < q; ++s) {
            if (s == orig)
                continue;
            w[i] = s;
            substitute_from(w, i + 1, budget - 1, q, out);
        }
        w[i] = orig;
    }
}

ErrorBall wrap(const Seq& x, std::size_t t, BallKind kind, const std::set<Word>& words)
{
    ErrorBall ball{x, t, kind, {}};
    for (const auto& w : words)
        ball.members.insert(x.with(w));
    return ball;
}

} // namespace

ErrorBall substitution_ball(const Seq& x, std::size_t t)
{
    std::set<Word> words;
    Word w = x.vec();
    substitute_from(w, 0, std::min(t, w.size()), x.q(), words);
    return wrap(x, t, BallKind::substitution, words);
}

ErrorBall deletion_ball(const Seq& x, std::size_t t)
{
    if (t > x.size())
        throw InvalidArgument("deletion radius " + std::to_string(t) + " exceeds length " +
                              std::to_string(x.size()));
    std::set<Word> all{x.vec()};
    std::set<Word> level{x.vec()};
    for (std::size_t r = 0; r < t; ++r) {
        std::set<Word> next;
        for (const auto& w : level)
            for (std::size_t i = 0; i < w.size(); ++i) {
                // deleting any symbol of a run gives the same word
                if (i > 0 && w[i] == w[i - 1])
                    continue;
                Word v = w;
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(std::move(v));
            }
        all.insert(next.begin(), next.end());
        level = std::move(next);
    }
    return wrap(x, t, BallKind::deletion, all);
}

ErrorBall insertion_ball(const Seq& x, std::size_t t)
{
    const std::size_t q = x.q();
    std::set<Word> all{x.vec()};
    std::set<Word> level{x.vec()};
    for (std::size_t r = 0; r < t; ++r) {
        std::set<Word> next;
        for (const auto& w : level)
            for (std::size_t i = 0; i <= w.size(); ++i)
                for (Symbol s = 0; s < q; ++s) {
                    Word v = w;
                    v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), s);
                    next.insert(std::move(v));
                }
        all.insert(next.begin(), next.end());
        level = std::move(next);
    }
    return wrap(x, t, BallKind::insertion, all);
}

ErrorBall error_ball(const Seq& x, std::size_t t, BallKind kind)
{
    switch (kind) {
    case BallKind::substitution: return substitution_ball(x, t);
    case BallKind::deletion: return deletion_ball(x, t);
    case BallKind::insertion: return insertion_ball(x, t);
    }
    throw InvalidArgument("unknown ball kind");
}

bool deletion_confusable(const Seq& x, const Seq& y, std::size_t t)
{
    if (x.q() != y.q())
        throw InvalidArgument("confusability requires a common alphabet");
    const auto bx = deletion_ball(x, std::min(t, x.size()));
    const auto by = deletion_ball(y, std::min(t, y.size()));
    return std::any_of(bx.members.begin(), bx.members.end(),
                       [&](const Seq& s) { return by.contains(s); });
}

bool is_subsequence(std::span<const Symbol> y, std::span<const Symbol> x) noexcept
{
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size() && j < y.size(); ++i)
        if (x[i] == y[j])
            ++j;
    return j == y.size();
}

} // namespace dnacode
