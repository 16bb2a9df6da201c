#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnacode/error.hpp"
#include "dnacode/random.hpp"
#include "dnacode/seq.hpp"

namespace dnacode::sliced {

using BigUint = boost::multiprecision::cpp_int;

/// Unordered set of M distinct binary sequences of length L. Stored sorted
/// ascending, which is the canonical representative of the set.
struct SlicedCodeword {
    std::size_t M = 0;
    std::size_t L = 0;
    std::vector<Seq> sequences;

    /// Validates lengths, alphabet and distinctness, then sorts.
    static SlicedCodeword from(std::vector<Seq> sequences, std::size_t L);
};

/// Channel output: a multiset of reads with no order and arbitrary lengths.
struct SlicedRead {
    std::vector<Seq> reads;
};

struct SlicedChannelConfig {
    std::size_t losses = 0;
    std::size_t substitutions = 0;         ///< total over all surviving symbols
    std::size_t max_deletions = 0;         ///< per sequence, count drawn in [0, budget]
    std::size_t max_insertions = 0;        ///< per sequence, count drawn in [0, budget]
    std::uint64_t seed = 0;
};

void validate(const SlicedChannelConfig& cfg, std::size_t M, std::size_t L);

/// Drops `losses` sequences, places the substitutions uniformly without
/// replacement on the surviving symbols, applies the per-sequence indel
/// budgets and shuffles.
SlicedRead sliced_channel(const SlicedCodeword& cw, const SlicedChannelConfig& cfg, Rng& rng);
SlicedRead sliced_channel(const SlicedCodeword& cw, const SlicedChannelConfig& cfg);

/// True when `read` can be produced from `cw` with exactly cfg.losses losses,
/// at most cfg.substitutions substitutions in total and the per-sequence
/// indel budgets.
bool sliced_reachable(const SlicedCodeword& cw, const SlicedRead& read, const SlicedChannelConfig& cfg);

BigUint binomial(const BigUint& n, std::size_t k);
double log2_big(const BigUint& x);

/// log2 C(2^L, M) - code_size_log2. Throws InvalidArgument when M > 2^L.
double set_redundancy(double code_size_log2, std::size_t M, std::size_t L);

/// Largest prefix length for which lexicodes are enumerated.
inline constexpr std::size_t kMaxPrefixBits = 20;

/// Greedy lexicographic code: scan words of length p in increasing order and
/// keep each one at distance >= d from all kept words. Cached.
const std::vector<std::uint32_t>& lexicode(std::size_t p, std::size_t d);

std::size_t hamming(std::uint32_t a, std::uint32_t b) noexcept;

/// All M-subsets of the length-p distance-d lexicode, in lexicographic order
/// of their (ascending) word lists.
struct PrefixCodebookFamily {
    std::size_t M = 0;
    std::size_t p = 0;
    std::size_t d = 0;
    const std::vector<std::uint32_t>* pool = nullptr;

    BigUint size() const;
    /// Set with the given rank, sorted ascending.
    std::vector<std::uint32_t> set(BigUint rank) const;
    /// Inverse of set(); the words must be pool members.
    BigUint rank(const std::vector<std::uint32_t>& words) const;
};

/// Throws InvalidArgument when no distance-d M-set of length-p words exists.
PrefixCodebookFamily greedy_prefix_family(std::size_t M, std::size_t p, std::size_t d);

/// Carries the lost and duplicated indices found while decoding.
class SlicedDecodeError : public DecodeError {
public:
    SlicedDecodeError(const std::string& what, std::vector<std::size_t> missing,
                      std::vector<std::size_t> duplicated, std::string code = "erasure")
        : DecodeError(what, std::move(code)), missing(std::move(missing)),
          duplicated(std::move(duplicated)) {}

    std::vector<std::size_t> missing;
    std::vector<std::size_t> duplicated;
};

// --- index-based scheme --------------------------------------------------

struct IndexedProtection {
    std::size_t replication = 1;   ///< physical copies per logical sequence
    std::size_t substitutions = 0; ///< index distance 2s+1 and s-error payload code
    bool payload_arbitration = false; ///< resolve index collisions with the payload code
};

struct IndexedLayout {
    std::size_t M = 0;
    std::size_t L = 0;
    IndexedProtection protection;
    std::size_t physical = 0;       ///< M * replication
    std::size_t index_bits = 0;
    std::size_t payload_bits = 0;   ///< M * (L - index_bits)
    std::size_t payload_t = 0;
    std::size_t parity_bits = 0;
    std::size_t data_bits = 0;

    double redundancy() const;
};

IndexedLayout indexed_layout(std::size_t M, std::size_t L, const IndexedProtection& protect = {});
SlicedCodeword encode_indexed(const Seq& data, std::size_t M, std::size_t L,
                              const IndexedProtection& protect = {});
Seq decode_indexed(const SlicedRead& reads, std::size_t M, std::size_t L,
                   const IndexedProtection& protect = {});

// --- data-as-index scheme ------------------------------------------------

struct DataIndexedLayout {
    std::size_t M = 0;
    std::size_t L = 0;
    std::size_t t = 0;
    std::size_t p = 0;
    BigUint family_size;
    std::size_t index_bits = 0;     ///< floor(log2 family_size)
    std::size_t payload_bits = 0;   ///< M * (L - p)
    std::size_t parity_bits = 0;
    std::size_t data_bits = 0;

    double redundancy() const;
};

/// Without p, picks the prefix length with the most data bits (smallest on ties).
DataIndexedLayout data_indexed_layout(std::size_t M, std::size_t L, std::size_t t,
                                      std::optional<std::size_t> p = std::nullopt);
SlicedCodeword encode_data_indexed(const Seq& data, std::size_t M, std::size_t L, std::size_t t);
Seq decode_data_indexed(const SlicedRead& reads, std::size_t M, std::size_t L, std::size_t t);

// --- vial files ----------------------------------------------------------

struct Vial {
    std::size_t M = 0;
    std::size_t L = 0;
    std::vector<Seq> sequences;
};

void write_vial(std::ostream& os, const Vial& vial);
Vial read_vial(std::istream& is);

} // namespace dnacode::sliced
