#include "dnacode/seq.hpp"

#include <algorithm>
#include <mutex>
#include <map>

#include "dnacode/error.hpp"

namespace dnacode {

Alphabet::Alphabet(std::string glyphs, std::optional<std::vector<Symbol>> complement)
    : glyphs_(std::move(glyphs)), complement_(std::move(complement))
{
    if (glyphs_.empty() || glyphs_.size() > 255)
        throw InvalidArgument("alphabet size must be in [1, 255]");
    std::string sorted = glyphs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("alphabet glyphs must be distinct");
    if (complement_) {
        if (complement_->size() != glyphs_.size())
            throw InvalidArgument("complement map must cover every symbol");
        for (std::size_t s = 0; s < complement_->size(); ++s) {
            Symbol c = (*complement_)[s];
            if (c >= glyphs_.size() || (*complement_)[c] != s)
                throw InvalidArgument("complement map must be an involution");
        }
    }
}

std::optional<Symbol> Alphabet::index_of(char glyph) const noexcept
{
    auto pos = glyphs_.find(glyph);
    if (pos == std::string::npos)
        return std::nullopt;
    return static_cast<Symbol>(pos);
}

Symbol Alphabet::complement(Symbol s) const
{
    if (!complement_)
        throw InvalidArgument("alphabet '" + glyphs_ + "' has no complement map");
    return complement_->at(s);
}

namespace alphabets {

namespace {
std::vector<Symbol> mirror(std::size_t q)
{
    std::vector<Symbol> c(q);
    for (std::size_t s = 0; s < q; ++s)
        c[s] = static_cast<Symbol>(q - 1 - s);
    return c;
}
} // namespace

AlphabetPtr binary()
{
    static const AlphabetPtr a = std::make_shared<const Alphabet>("01", mirror(2));
    return a;
}

AlphabetPtr dna()
{
    static const AlphabetPtr a = std::make_shared<const Alphabet>("ACGT", mirror(4));
    return a;
}

AlphabetPtr zq(std::size_t q)
{
    if (q < 2 || q > 10)
        throw InvalidArgument("zq alphabet requires 2 <= q <= 10");
    if (q == 2)
        return binary();
    static std::mutex mu;
    static std::map<std::size_t, AlphabetPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[q];
    if (!slot)
        slot = std::make_shared<const Alphabet>(std::string("0123456789").substr(0, q), mirror(q));
    return slot;
}

AlphabetPtr by_name(std::string_view name)
{
    if (name == "binary" || name == "bin")
        return binary();
    if (name == "dna" || name == "DNA")
        return dna();
    if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'Z'))
        return zq(std::stoul(std::string(name.substr(1))));
    throw InvalidArgument("unknown alphabet '" + std::string(name) + "'");
}

AlphabetPtr detect(std::string_view text)
{
    bool digits = true;
    char hi = '0';
    for (char c : text) {
        if (c >= '0' && c <= '9')
            hi = std::max(hi, c);
        else
            digits = false;
    }
    if (digits)
        return zq(std::max<std::size_t>(2, static_cast<std::size_t>(hi - '0') + 1));
    return dna();
}

} // namespace alphabets

Seq::Seq() : alphabet_(alphabets::binary()) {}

Seq::Seq(std::vector<Symbol> symbols, AlphabetPtr alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet))
{
    if (!alphabet_)
        throw InvalidArgument("sequence requires an alphabet");
    for (Symbol s : symbols_)
        if (s >= alphabet_->size())
            throw InvalidArgument("symbol index out of alphabet range");
}

Seq Seq::parse(std::string_view glyphs, AlphabetPtr alphabet)
{
    std::vector<Symbol> symbols;
    symbols.reserve(glyphs.size());
    for (char c : glyphs) {
        auto idx = alphabet->index_of(c);
        if (!idx)
            throw InvalidArgument(std::string("glyph '") + c + "' is not in alphabet '" +
                                  alphabet->glyphs() + "'");
        symbols.push_back(*idx);
    }
    return Seq(std::move(symbols), std::move(alphabet));
}

std::string Seq::str() const
{
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_)
        out.push_back(alphabet_->glyph(s));
    return out;
}

Seq Seq::erased(std::size_t pos) const
{
    if (pos >= symbols_.size())
        throw InvalidArgument("erase position out of range");
    auto v = symbols_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
    return with(std::move(v));
}

Seq Seq::inserted(std::size_t pos, Symbol s) const
{
    if (pos > symbols_.size())
        throw InvalidArgument("insert position out of range");
    auto v = symbols_;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), s);
    return Seq(std::move(v), alphabet_);
}

Seq Seq::substituted(std::size_t pos, Symbol s) const
{
    if (pos >= symbols_.size())
        throw InvalidArgument("substitution position out of range");
    auto v = symbols_;
    v[pos] = s;
    return Seq(std::move(v), alphabet_);
}

Seq Seq::slice(std::size_t pos, std::size_t len) const
{
    if (pos > symbols_.size() || len > symbols_.size() - pos)
        throw InvalidArgument("slice out of range");
    auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
    return with(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(len)));
}

Seq Seq::concat(const Seq& tail) const
{
    auto v = symbols_;
    v.insert(v.end(), tail.symbols_.begin(), tail.symbols_.end());
    return Seq(std::move(v), alphabet_);
}

std::strong_ordering Seq::operator<=>(const Seq& other) const noexcept
{
    if (auto c = symbols_.size() <=> other.symbols_.size(); c != 0)
        return c;
    return symbols_ <=> other.symbols_;
}

bool Seq::operator==(const Seq& other) const noexcept
{
    return symbols_ == other.symbols_ && alphabet_->size() == other.alphabet_->size();
}

std::size_t count_runs(std::span<const Symbol> s) noexcept
{
    if (s.empty())
        return 0;
    std::size_t runs = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        runs += s[i] != s[i - 1];
    return runs;
}

} // namespace dnacode

std::size_t std::hash<dnacode::Seq>::operator()(const dnacode::Seq& s) const noexcept
{
    // FNV-1a over the symbol indices
    std::size_t h = 1469598103934665603ull;
    for (auto sym : s.symbols()) {
        h ^= sym;
        h *= 1099511628211ull;
    }
    return h ^ s.size();
}
