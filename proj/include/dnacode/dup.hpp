#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dnacode/error.hpp"
#include "dnacode/random.hpp"
#include "dnacode/seq.hpp"

namespace dnacode::dup {

using BigUint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class DupKind { tandem, end, interspersed, reverse_complement };

std::string to_string(DupKind kind);
/// Accepts tandem, end, interspersed, rc / reverse_complement.
DupKind dup_kind_from_string(std::string_view name);

struct DupRule {
    DupKind kind = DupKind::tandem;
    std::size_t k = 1;
};

/// Copies x[src_pos, src_pos + k). Tandem and reverse-complement insert right
/// after the source, end appends, interspersed inserts at insert_pos (an
/// index into x, 0..|x|).
Seq apply_dup(const Seq& x, const DupRule& rule, std::size_t src_pos,
              std::optional<std::size_t> insert_pos = std::nullopt);

/// Number of (source, insertion) choices available in one step.
std::size_t site_count(std::size_t length, const DupRule& rule);

/// The outcome of site number `site` in [0, site_count).
Seq apply_site(const Seq& x, const DupRule& rule, std::size_t site);

/// Distinct one-step descendants.
std::set<Seq> children(const Seq& x, const DupRule& rule);

// --- descendant cones ------------------------------------------------------

/// State cap for enumerations: DNACODE_MAX_STATES if set, else 2,000,000.
std::size_t default_max_states();

/// Raised when a breadth-first enumeration outgrows its state cap. Carries
/// the last level that was completed.
class PartialResult : public BoundExceeded {
public:
    PartialResult(const std::string& what, std::size_t last_length, std::size_t last_count)
        : BoundExceeded(what), last_length(last_length), last_count(last_count) {}

    std::size_t last_length;
    std::size_t last_count;
};

/// |D*(x) ∩ Σ^n| for a fixed-k rule.
std::size_t descendant_count(const Seq& x, const DupRule& rule, std::size_t n,
                             std::size_t max_states = default_max_states());

struct CapacityPoint {
    std::size_t n = 0;
    std::size_t count = 0;
    double rate = 0.0; ///< log2(count) / n
};

/// One point per reachable length |x|, |x|+k, ... up to n_max.
std::vector<CapacityPoint> capacity_profile(const Seq& x, const DupRule& rule, std::size_t n_max,
                                            std::size_t max_states = default_max_states());

// --- stochastic model ------------------------------------------------------

struct PolyaConfig {
    Seq x0;
    DupRule rule;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
};

/// One trajectory; every step picks a site uniformly.
Seq polya_simulate(const PolyaConfig& cfg, Rng& rng);
Seq polya_simulate(const PolyaConfig& cfg);

std::map<Seq, Rational> polya_exact_dist(const PolyaConfig& cfg,
                                         std::size_t max_states = default_max_states());

double entropy_bits(const std::map<Seq, Rational>& dist);

/// H(S_steps) / steps from the exact distribution; 0 for zero steps.
double entropy_estimate(const PolyaConfig& cfg, std::size_t max_states = default_max_states());

/// Sliding-window frequencies of the length-m substrings, keyed by glyphs.
std::map<std::string, double> kmer_frequencies(const Seq& x, std::size_t m);

struct KmerRow {
    std::size_t step = 0;
    std::string kmer;
    double freq = 0.0;
};

/// Frequencies along one trajectory, recorded at step 0, every `every` steps
/// and at the last step.
std::vector<KmerRow> polya_kmer_series(const PolyaConfig& cfg, std::size_t m, std::size_t every);

// --- derivative and roots --------------------------------------------------

struct DerivativeSeq {
    Seq d;          ///< over Z_q, length n + k
    std::size_t k = 1;
    std::size_t q = 2;
    AlphabetPtr alphabet; ///< alphabet of the integrated word
};

DerivativeSeq derivative(const Seq& x, std::size_t k);

/// Inverse of derivative(); DecodeError ("corrupt") if the last k symbols
/// are inconsistent.
Seq integrate(const DerivativeSeq& d);

/// Sources s with x[s, s+k) == x[s+k, s+2k).
std::vector<std::size_t> tandem_dedup_sites(const Seq& x, std::size_t k);

/// Removes the second copy of the repeat at s.
Seq tandem_dedup(const Seq& x, std::size_t k, std::size_t s);

bool is_irreducible(const Seq& x, std::size_t k);

/// Unique root under fixed-k tandem de-duplication, computed by deleting
/// interior 0^k blocks of the derivative.
Seq tandem_root_fixed_k(const Seq& x, std::size_t k);

struct RootReport {
    std::set<Seq> roots;
    std::size_t min_steps = 0;
};

/// Roots under tandem de-duplication of every length.
RootReport roots_unbounded_tandem(const Seq& x, std::size_t max_states = default_max_states());

/// f(n): max over binary words of length n of the fewest de-duplication
/// steps to a root. Exhaustive, n <= 24.
std::size_t max_distance_to_root(std::size_t n);

/// f(1..n_max) in one pass.
std::vector<std::size_t> distance_to_root_table(std::size_t n_max);

/// Depth of the shallowest descendant containing y, or nullopt within the bound.
std::optional<std::size_t> fully_expressive_search(const DupRule& rule, const Seq& x, const Seq& y,
                                                   std::size_t depth_bound,
                                                   std::size_t max_states = default_max_states());

// --- irreducible-word code -------------------------------------------------

/// Number of length-n words over Z_q with no length-k tandem repeat.
BigUint irreducible_count(std::size_t n, std::size_t q, std::size_t k);

/// log2(count) / n.
double irreducible_rate(std::size_t n, std::size_t q, std::size_t k);

/// All irreducible words in lexicographic order; BoundExceeded past max_states.
std::vector<Seq> irreducible_words(std::size_t n, std::size_t q, std::size_t k,
                                   std::size_t max_states = default_max_states());

/// floor(log2 irreducible_count).
std::size_t dup_code_data_bits(std::size_t n, std::size_t q, std::size_t k);

/// Lexicographic rank of an irreducible word, and its inverse.
BigUint irreducible_rank(const Seq& word, std::size_t k);
Seq irreducible_unrank(BigUint rank, std::size_t n, std::size_t q, std::size_t k);

/// The data bits select the codeword by rank.
Seq dup_code_encode(const Seq& data, std::size_t n, std::size_t q, std::size_t k);

/// Reduces y to its root and reads the data back from the rank.
Seq dup_code_decode(const Seq& y, std::size_t q, std::size_t k);

} // namespace dnacode::dup
