#include <doctest.h>

#include <map>

#include "dnacode/balls.hpp"
#include "dnacode/channel.hpp"
#include "dnacode/error.hpp"
#include "dnacode/mapping.hpp"
#include "oracles.hpp"

using namespace dnacode;

namespace {

std::set<std::string> strings(const ErrorBall& ball)
{
    std::set<std::string> out;
    for (const auto& m : ball.members)
        out.insert(m.str());
    return out;
}

Seq b(std::string_view s) { return Seq::binary(s); }

} // namespace

TEST_CASE("alphabets and sequences")
{
    auto dna = alphabets::dna();
    CHECK(dna->size() == 4);
    CHECK(dna->complement(*dna->index_of('A')) == *dna->index_of('T'));
    CHECK(dna->complement(*dna->index_of('C')) == *dna->index_of('G'));
    CHECK(alphabets::zq(2) == alphabets::binary());
    CHECK(alphabets::zq(3)->glyphs() == "012");
    CHECK_THROWS_AS(Seq::binary("0120"), InvalidArgument);
    CHECK_THROWS_AS(Alphabet("AA"), InvalidArgument);
    CHECK_THROWS_AS(Alphabet("01", std::vector<Symbol>{0, 0}), InvalidArgument);

    Seq s = Seq::dna("ACGT");
    CHECK(s.str() == "ACGT");
    CHECK(s.erased(0).str() == "CGT");
    CHECK(s.inserted(4, 0).str() == "ACGTA");
    CHECK(s.slice(1, 2).str() == "CG");
    CHECK(b("11") > b("0"));  // shortlex
    CHECK(b("01") < b("10"));
    CHECK(alphabets::detect("0101") == alphabets::binary());
    CHECK(alphabets::detect("210121010")->size() == 3);
    CHECK(alphabets::detect("ACCT") == alphabets::dna());
}

TEST_CASE("substitution ball worked examples")
{
    CHECK(strings(substitution_ball(b("1001"), 1)) ==
          std::set<std::string>{"1001", "0001", "1101", "1011", "1000"});
    CHECK(strings(substitution_ball(b("0000"), 1)) ==
          std::set<std::string>{"0000", "1000", "0100", "0010", "0001"});
    CHECK(strings(substitution_ball(b("0110"), 0)) == std::set<std::string>{"0110"});
}

TEST_CASE("deletion ball worked examples")
{
    CHECK(strings(deletion_ball(b("1001"), 1)) ==
          std::set<std::string>{"1001", "001", "101", "100"});
    CHECK(strings(deletion_ball(b("0000"), 1)) == std::set<std::string>{"0000", "000"});
    CHECK(strings(deletion_ball(b("1011"), 1)) ==
          std::set<std::string>{"1011", "011", "111", "101"});
    CHECK_THROWS_AS(deletion_ball(b("01"), 3), InvalidArgument);
}

TEST_CASE("insertion ball examples")
{
    CHECK(strings(insertion_ball(b("0"), 1)) == std::set<std::string>{"0", "00", "01", "10"});
    CHECK(strings(insertion_ball(b(""), 1)) == std::set<std::string>{"", "0", "1"});
    CHECK(strings(insertion_ball(b("0110"), 0)) == std::set<std::string>{"0110"});
}

TEST_CASE("deletion confusability")
{
    CHECK(deletion_confusable(b("1010101"), b("0101010"), 1));
    CHECK(deletion_ball(b("1010101"), 1).contains(b("010101")));
    CHECK(deletion_ball(b("0101010"), 1).contains(b("010101")));
    CHECK(deletion_confusable(b("0110"), b("0110"), 0));
    CHECK_FALSE(deletion_confusable(b("00"), b("11"), 1));
}

TEST_CASE("substitution ball size depends only on (n, t, q)")
{
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t t = 0; t <= 2; ++t) {
            std::set<std::size_t> sizes;
            for (const auto& w : oracle::all_words(n))
                sizes.insert(substitution_ball(b(w), t).size());
            CHECK(sizes.size() == 1);
        }
    // quaternary spot check: 1 + n*3 for t = 1
    for (const auto& w : oracle::all_words(4, 4))
        CHECK(substitution_ball(Seq::parse(w, alphabets::zq(4)), 1).size() == 13);
}

TEST_CASE("deletion ball agrees with mask enumeration and run count")
{
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const auto ball1 = deletion_ball(b(w), 1);
            CHECK(ball1.size() == count_runs(b(w).symbols()) + 1);
            if (n <= 8)
                CHECK(strings(deletion_ball(b(w), std::min<std::size_t>(2, n))) ==
                      oracle::deletion_ball(w, 2));
        }
    // equal lengths, different sizes
    CHECK(deletion_ball(b("0000"), 1).size() != deletion_ball(b("1011"), 1).size());
}

TEST_CASE("insertion/deletion duality")
{
    for (std::size_t m = 0; m <= 8; ++m)
        for (const auto& y : oracle::all_words(m)) {
            const std::size_t t = 2;
            const auto ins = insertion_ball(b(y), t);
            for (std::size_t n = m; n <= std::min<std::size_t>(8, m + t); ++n)
                for (const auto& x : oracle::all_words(n))
                    CHECK(ins.contains(b(x)) == oracle::is_subsequence(y, x));
        }
}

TEST_CASE("bits to DNA")
{
    CHECK(bits_to_dna(b("00101001")).str() == "AGGC");
    CHECK(bits_to_dna(b("")).str().empty());
    CHECK_THROWS_AS(bits_to_dna(b("101")), InvalidArgument);
    for (std::size_t n = 0; n <= 16; n += 2)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += n > 10 ? 7 : 1) {
            Seq s = b(oracle::bits_of(mask, n));
            CHECK(dna_to_bits(bits_to_dna(s)) == s);
        }
}

TEST_CASE("repetition-3 code")
{
    CHECK(repetition3_encode(b("01001")).str() == "000111000000111");
    CHECK(repetition3_decode(b("100110000001111")).str() == "01001");
    CHECK_THROWS_AS(repetition3_decode(b("0001")), DecodeError);
    for (std::size_t n = 0; n <= 10; ++n)
        for (const auto& w : oracle::all_words(n))
            CHECK(repetition3_decode(repetition3_encode(b(w))).str() == w);
}

TEST_CASE("point channel")
{
    const Seq x = b("1011");
    CHECK(apply_channel(x, ChannelConfig{}) == x);

    ChannelConfig bad;
    bad.deletions = 5;
    CHECK_THROWS_AS(apply_channel(x, bad), InvalidArgument);

    SUBCASE("deletion-only output stays in the deletion ball")
    {
        Rng pick(99);
        for (std::uint64_t trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 1 + pick.below(12);
            Seq w = b(oracle::bits_of(pick.next(), n));
            ChannelConfig cfg;
            cfg.deletions = pick.below(std::min<std::size_t>(n, 3) + 1);
            cfg.seed = trial;
            Seq out = apply_channel(w, cfg);
            CHECK(out.size() == n - cfg.deletions);
            CHECK(deletion_ball(w, cfg.deletions).contains(out));
        }
    }

    SUBCASE("a single deletion from 1011 gives 101 about half the time")
    {
        ChannelConfig cfg;
        cfg.deletions = 1;
        Rng rng(2024);
        std::map<std::string, int> freq;
        const int trials = 20000;
        for (int i = 0; i < trials; ++i)
            ++freq[apply_channel(x, cfg, rng).str()];
        CHECK(freq.size() == 3);
        CHECK(freq["101"] / double(trials) == doctest::Approx(0.5).epsilon(0.03));
    }

    SUBCASE("pure function of config and seed")
    {
        ChannelConfig cfg;
        cfg.deletions = 2;
        cfg.insertions = 1;
        cfg.substitutions = 2;
        cfg.substitution_rate = 0.1;
        cfg.seed = 7;
        const Seq w = b("0110100111010");
        CHECK(apply_channel(w, cfg) == apply_channel(w, cfg));
        auto sub_only = cfg;
        sub_only.deletions = sub_only.insertions = 0;
        sub_only.substitution_rate = 0;
        CHECK(substitution_ball(w, 2).contains(apply_channel(w, sub_only)));
    }
}
