#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnacode {

using Symbol = std::uint8_t;

/// A finite alphabet of q glyphs. Symbols are handled internally as indices
/// 0..q-1; glyphs only appear when parsing or printing.
class Alphabet {
public:
    Alphabet(std::string glyphs, std::optional<std::vector<Symbol>> complement = std::nullopt);

    std::size_t size() const noexcept { return glyphs_.size(); }
    const std::string& glyphs() const noexcept { return glyphs_; }
    char glyph(Symbol s) const { return glyphs_.at(s); }
    std::optional<Symbol> index_of(char glyph) const noexcept;

    bool has_complement() const noexcept { return complement_.has_value(); }
    Symbol complement(Symbol s) const;

    bool operator==(const Alphabet& other) const noexcept { return glyphs_ == other.glyphs_; }

private:
    std::string glyphs_;
    std::optional<std::vector<Symbol>> complement_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

namespace alphabets {
/// "0","1" with 0<->1.
AlphabetPtr binary();
/// "A","C","G","T" with Watson-Crick pairing A<->T, C<->G (indices 0..3, so
/// the complement is 3 - s).
AlphabetPtr dna();
/// Z_q with glyphs '0'..'9' (q <= 10) and complement s -> q-1-s.
/// zq(2) is the binary alphabet.
AlphabetPtr zq(std::size_t q);
/// Resolve a name: "binary", "dna", or "zN".
AlphabetPtr by_name(std::string_view name);
/// Smallest of binary/dna/zq that can render every glyph of `text`.
AlphabetPtr detect(std::string_view text);
} // namespace alphabets

/// Immutable sequence over an alphabet.
class Seq {
public:
    Seq();
    Seq(std::vector<Symbol> symbols, AlphabetPtr alphabet);

    static Seq parse(std::string_view glyphs, AlphabetPtr alphabet);
    static Seq binary(std::string_view glyphs) { return parse(glyphs, alphabets::binary()); }
    static Seq dna(std::string_view glyphs) { return parse(glyphs, alphabets::dna()); }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t q() const noexcept { return alphabet_->size(); }

    std::string str() const;

    /// Same alphabet, new symbols.
    Seq with(std::vector<Symbol> symbols) const { return Seq(std::move(symbols), alphabet_); }
    Seq erased(std::size_t pos) const;
    Seq inserted(std::size_t pos, Symbol s) const;
    Seq substituted(std::size_t pos, Symbol s) const;
    Seq slice(std::size_t pos, std::size_t len) const;
    Seq concat(const Seq& tail) const;

    /// Shortlex: shorter sequences first, then lexicographic by symbol index.
    std::strong_ordering operator<=>(const Seq& other) const noexcept;
    bool operator==(const Seq& other) const noexcept;

private:
    std::vector<Symbol> symbols_;
    AlphabetPtr alphabet_;
};

std::size_t count_runs(std::span<const Symbol> s) noexcept;

} // namespace dnacode

template <>
struct std::hash<dnacode::Seq> {
    std::size_t operator()(const dnacode::Seq& s) const noexcept;
};
