#pragma once

#include "dnacode/seq.hpp"

namespace dnacode {

/// A=00, C=01, G=10, T=11. Odd-length input is rejected.
Seq bits_to_dna(const Seq& bits);
Seq dna_to_bits(const Seq& dna);

/// Each bit stored three times.
Seq repetition3_encode(const Seq& data);
/// Majority vote per consecutive triple; length must be a multiple of 3.
Seq repetition3_decode(const Seq& noisy);

} // namespace dnacode
