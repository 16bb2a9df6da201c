#include "dnacode/mapping.hpp"

#include "dnacode/error.hpp"

namespace dnacode {

namespace {
void require_binary(const Seq& s, const char* what)
{
    if (s.q() != 2)
        throw InvalidArgument(std::string(what) + " expects a binary sequence");
}
} // namespace

Seq bits_to_dna(const Seq& bits)
{
    require_binary(bits, "bits_to_dna");
    if (bits.size() % 2 != 0)
        throw InvalidArgument("bits_to_dna needs an even number of bits");
    std::vector<Symbol> out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2)
        out.push_back(static_cast<Symbol>(bits[i] << 1 | bits[i + 1]));
    return Seq(std::move(out), alphabets::dna());
}

Seq dna_to_bits(const Seq& dna)
{
    if (dna.q() != 4)
        throw InvalidArgument("dna_to_bits expects a DNA sequence");
    std::vector<Symbol> out;
    out.reserve(dna.size() * 2);
    for (Symbol s : dna.symbols()) {
        out.push_back(static_cast<Symbol>(s >> 1));
        out.push_back(static_cast<Symbol>(s & 1));
    }
    return Seq(std::move(out), alphabets::binary());
}

Seq repetition3_encode(const Seq& data)
{
    require_binary(data, "repetition3_encode");
    std::vector<Symbol> out;
    out.reserve(data.size() * 3);
    for (Symbol b : data.symbols())
        out.insert(out.end(), 3, b);
    return data.with(std::move(out));
}

Seq repetition3_decode(const Seq& noisy)
{
    require_binary(noisy, "repetition3_decode");
    if (noisy.size() % 3 != 0)
        throw DecodeError("repetition-3 input length " + std::to_string(noisy.size()) +
                              " is not a multiple of 3",
                          "framing");
    std::vector<Symbol> out;
    out.reserve(noisy.size() / 3);
    for (std::size_t i = 0; i < noisy.size(); i += 3)
        out.push_back(noisy[i] + noisy[i + 1] + noisy[i + 2] >= 2 ? 1 : 0);
    return noisy.with(std::move(out));
}

} // namespace dnacode
