#pragma once

#include <cstddef>
#include <set>
#include <string_view>

#include "dnacode/seq.hpp"

namespace dnacode {

enum class BallKind { substitution, deletion, insertion };

std::string_view to_string(BallKind kind) noexcept;
BallKind ball_kind_from_string(std::string_view name);

/// Every sequence reachable from `center` by at most `radius` errors of one kind.
struct ErrorBall {
    Seq center;
    std::size_t radius = 0;
    BallKind kind = BallKind::substitution;
    std::set<Seq> members;

    bool contains(const Seq& s) const { return members.count(s) != 0; }
    std::size_t size() const noexcept { return members.size(); }
};

ErrorBall substitution_ball(const Seq& x, std::size_t t);

/// Subsequences of x of length >= n - t. Throws if t > n.
ErrorBall deletion_ball(const Seq& x, std::size_t t);

/// Supersequences of x of length <= n + t.
ErrorBall insertion_ball(const Seq& x, std::size_t t);

ErrorBall error_ball(const Seq& x, std::size_t t, BallKind kind);

/// True iff the radius-t deletion balls of x and y intersect.
bool deletion_confusable(const Seq& x, const Seq& y, std::size_t t);

/// Subsequence test (y can be obtained from x by deletions only).
bool is_subsequence(std::span<const Symbol> y, std::span<const Symbol> x) noexcept;

} // namespace dnacode
