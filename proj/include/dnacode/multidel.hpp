#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnacode/seq.hpp"

namespace dnacode::multidel {

using BigUint = boost::multiprecision::cpp_int;

/// Minimum number of 0's required between two 1's for a t-deletion
/// constrained codeword (t - 1, and 0 for t = 1).
std::size_t gap_for(std::size_t t);

/// Number of checksums: 3 for t = 2 (p = 0, 1, 2), 6t + 1 otherwise.
std::size_t sum_count(std::size_t t);

/// 2 n^{p+1} for t = 2, 3t n^{p+1} otherwise.
BigUint sum_modulus(std::size_t t, std::size_t n, std::size_t p);

/// Weight of position i (1-based) in checksum p: 1 for p = 0, sum_{j<=i} j^p
/// for p >= 1.
BigUint sum_weight(std::size_t i, std::size_t p);

bool satisfies_gap(const Seq& c, std::size_t gap) noexcept;

struct WeightedSums {
    std::size_t t = 0;
    std::size_t n = 0;
    std::vector<BigUint> residues;
    std::vector<BigUint> moduli;

    bool operator==(const WeightedSums&) const = default;
};

/// Checksums of a gap-constrained binary word. Throws InvalidArgument if c
/// violates the gap required for t.
WeightedSums weighted_sums(const Seq& c, std::size_t t);

/// Bit i is 1 iff c_i = 1 and c_{i+1} = 0, with c_{n+1} = 1.
Seq indicator10(const Seq& c);
/// Bit i is 1 iff c_i = 0 and c_{i+1} = 1, with c_{n+1} = 1.
Seq indicator01(const Seq& c);
/// Inverse of the indicator pair. Throws DecodeError on an inconsistent pair.
Seq reconstruct_from_indicators(const Seq& ind10, const Seq& ind01);

/// Length-n gap-constrained supersequences of y (at most t insertions)
/// whose checksums equal `sums`; stops after `limit` matches.
std::vector<Seq> constrained_candidates(const Seq& y, std::size_t n, const WeightedSums& sums,
                                        std::size_t t, std::size_t limit = 2);

/// The unique constrained codeword behind y. Throws DecodeError with code
/// "uncorrectable" when no candidate exists, "ambiguous" when several do.
Seq decode_constrained(const Seq& y, std::size_t n, const WeightedSums& sums, std::size_t t);

/// Each bit repeated t+1 times.
Seq repetition_del_encode(const Seq& bits, std::size_t t);
/// Round every run up to a multiple of t+1. Throws if more than t symbols
/// are missing in total.
Seq repetition_del_decode(const Seq& noisy, std::size_t t);

/// Fixed-width big-endian serialization, ceil(log2 modulus_p) bits per residue.
std::size_t residue_width(const BigUint& modulus);
Seq serialize_sums(const WeightedSums& sums);
WeightedSums deserialize_sums(const Seq& bits, std::size_t t, std::size_t n);

/// Framing of the t-deletion codeword for a message of n bits.
struct TDelLayout {
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t checksum_bits = 0;   ///< both indicator checksums, serialized
    std::size_t tail_symbols = 0;    ///< after repetition
    std::size_t codeword_length = 0;

    std::size_t redundancy() const noexcept { return codeword_length - n; }
};

/// Supported for t in {1, 2}: the indicator vectors are gap-1 constrained.
TDelLayout t_del_layout(std::size_t n, std::size_t t);

/// data || repetition(serialize(sums(ind10(data))) || serialize(sums(ind01(data))))
Seq encode_t_del(const Seq& data, std::size_t t);

struct TDelDiagnostics {
    std::size_t deletions_in_data = 0;
    std::size_t tail_deficiency = 0;
    std::size_t candidates10 = 0;
    std::size_t candidates01 = 0;
};

Seq decode_t_del(const Seq& noisy, std::size_t t, std::size_t n,
                 TDelDiagnostics* diagnostics = nullptr);

} // namespace dnacode::multidel
