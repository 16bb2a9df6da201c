#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "dnacode/seq.hpp"

namespace dnacode::vt {

/// Varshamov-Tenengolts code VT_a(n): binary words c of length n with
/// sum_{i=1}^{n} i*c_i = a (mod n+1).
struct VtParams {
    std::size_t n = 0;
    std::size_t a = 0;

    std::size_t modulus() const noexcept { return n + 1; }
};

/// Largest n accepted by vt_codebook (2^n words are enumerated).
inline constexpr std::size_t kCodebookMaxN = 24;

std::size_t vt_syndrome(const Seq& c, const VtParams& params);

/// Decode a word that went through at most one deletion. Inputs of length
/// n-1 are corrected in O(n); inputs of length n are returned unchanged when
/// their syndrome matches.
Seq vt_decode(const Seq& y, const VtParams& params);

/// All length-n words of residue `a` having y as a subsequence of length n-1.
/// This is the exhaustive reference decoder; for a valid code it returns one
/// element.
std::vector<Seq> vt_decode_candidates(const Seq& y, const VtParams& params);

std::set<Seq> vt_codebook(const VtParams& params);

/// Check bits sit at positions 1, 2, 4, ..., 2^floor(log2 n).
std::vector<std::size_t> vt_check_positions(std::size_t n);
std::size_t vt_data_length(std::size_t n);

/// Systematic encoder into VT_a(n) (a defaults to 0).
Seq vt_encode(const Seq& data, std::size_t n, std::size_t a = 0);
/// Inverse of vt_encode's embedding: read the non-check positions.
Seq vt_extract(const Seq& codeword);

namespace detail {
// Raw routines with an explicit modulus; the public API always uses n+1.
std::size_t weighted_sum(std::span<const Symbol> c, std::size_t modulus);
Seq decode_with_modulus(const Seq& y, std::size_t n, std::size_t a, std::size_t modulus);
std::vector<Seq> candidates_with_modulus(const Seq& y, std::size_t n, std::size_t a,
                                         std::size_t modulus);
} // namespace detail

} // namespace dnacode::vt
