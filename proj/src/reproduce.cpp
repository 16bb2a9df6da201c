#include <algorithm>
#include <functional>
#include <sstream>

#include "dnacode/app.hpp"
#include "dnacode/balls.hpp"
#include "dnacode/dup.hpp"
#include "dnacode/mapping.hpp"
#include "dnacode/multidel.hpp"
#include "dnacode/sliced.hpp"
#include "dnacode/vt.hpp"

namespace dnacode::app {

namespace {

Seq b(std::string_view s) { return Seq::binary(s); }

std::string join(const std::vector<std::string>& v, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

std::string sorted_members(const ErrorBall& ball)
{
    std::vector<std::string> m;
    for (const auto& s : ball.members)
        m.push_back(s.str());
    std::sort(m.begin(), m.end());
    return "{" + join(m) + "}";
}

std::string set_of(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return "{" + join(v) + "}";
}

class Table {
public:
    void add(std::string group, std::string name, std::string expected,
             const std::function<std::string()>& compute)
    {
        ReproduceRow row{std::move(group), std::move(name), std::move(expected), {}, false};
        try {
            row.computed = compute();
        } catch (const std::exception& e) {
            row.computed = std::string("error: ") + e.what();
        }
        row.pass = row.computed == row.expected;
        rows.push_back(std::move(row));
    }

    std::vector<ReproduceRow> rows;
};

} // namespace

std::vector<ReproduceRow> reproduce_examples(const ReproduceConfig& cfg)
{
    Table t;

    // sequences, balls, mapping
    t.add("seq", "bits to nucleotides 00101001", "AGGC", [] { return bits_to_dna(b("00101001")).str(); });
    t.add("seq", "repetition-3 encode 01001", "000111000000111",
          [] { return repetition3_encode(b("01001")).str(); });
    t.add("seq", "repetition-3 decode 100110000001111", "01001",
          [] { return repetition3_decode(b("100110000001111")).str(); });
    t.add("seq", "substitution ball of 1001, t=1", "{0001,1000,1001,1011,1101}",
          [] { return sorted_members(substitution_ball(b("1001"), 1)); });
    t.add("seq", "substitution ball of 0000, t=1", "{0000,0001,0010,0100,1000}",
          [] { return sorted_members(substitution_ball(b("0000"), 1)); });
    t.add("seq", "deletion ball of 1001, t=1", "{001,100,1001,101}",
          [] { return sorted_members(deletion_ball(b("1001"), 1)); });
    t.add("seq", "deletion ball of 0000, t=1", "{000,0000}",
          [] { return sorted_members(deletion_ball(b("0000"), 1)); });
    t.add("seq", "deletion ball of 1011, t=1", "{011,101,1011,111}",
          [] { return sorted_members(deletion_ball(b("1011"), 1)); });
    t.add("seq", "1010101 and 0101010 share a single-deletion result", "true", [] {
        return deletion_confusable(b("1010101"), b("0101010"), 1) ? "true" : "false";
    });

    // VT rows go through the explicit-modulus routines so that the modulus can be mutated
    const std::size_t vt_mod = 7 + cfg.vt_modulus_skew;
    t.add("vt", "residues of the supersequences of 00110 (n=6)",
          "000110:2,001010:1,001100:0,001101:6,001110:5,010110:4,100110:3", [vt_mod] {
              std::vector<std::string> parts;
              for (const char* w : {"000110", "001010", "001100", "001101", "001110", "010110", "100110"})
                  parts.push_back(std::string(w) + ":" +
                                  std::to_string(vt::detail::weighted_sum(b(w).symbols(), vt_mod)));
              return join(parts);
          });
    t.add("vt", "decode 00110 (n=6, a=0)", "001100",
          [vt_mod] { return vt::detail::decode_with_modulus(b("00110"), 6, 0, vt_mod).str(); });
    t.add("vt", "codewords of length 6 containing 00110", "{001100}", [vt_mod] {
        std::vector<std::string> out;
        for (const auto& c : vt::detail::candidates_with_modulus(b("00110"), 6, 0, vt_mod))
            out.push_back(c.str());
        return set_of(out);
    });

    // two deletions
    t.add("multidel", "weighted sums of 101001", "3,28,106", [] {
        std::vector<std::string> out;
        for (const auto& r : multidel::weighted_sums(b("101001"), 2).residues)
            out.push_back(r.str());
        return join(out);
    });
    t.add("multidel", "moduli for n=6, t=2", "12,72,432", [] {
        std::vector<std::string> out;
        for (const auto& m : multidel::weighted_sums(b("101001"), 2).moduli)
            out.push_back(m.str());
        return join(out);
    });
    t.add("multidel", "decode 1001 with sums (3,28,106)", "101001", [] {
        return multidel::decode_constrained(b("1001"), 6, multidel::weighted_sums(b("101001"), 2), 2).str();
    });
    t.add("multidel", "indicator 1->0 of 101001", "101000",
          [] { return multidel::indicator10(b("101001")).str(); });
    t.add("multidel", "indicator 0->1 of 101001", "010010",
          [] { return multidel::indicator01(b("101001")).str(); });

    // sliced channel
    t.add("sliced", "reads {100000,1100001,10101} reachable from {110001,100100,101010,111111}", "true", [] {
        const auto cw = sliced::SlicedCodeword::from({b("110001"), b("100100"), b("101010"), b("111111")}, 6);
        sliced::SlicedChannelConfig cfg;
        cfg.losses = 1;
        cfg.substitutions = 1;
        cfg.max_deletions = 1;
        cfg.max_insertions = 1;
        return sliced::sliced_reachable(cw, {{b("100000"), b("1100001"), b("10101")}}, cfg) ? "true" : "false";
    });
    t.add("sliced", "ascending prefix order of {1001101,0101100,1010001,0001001}",
          "0001001,0101100,1001101,1010001", [] {
              const auto cw =
                  sliced::SlicedCodeword::from({b("1001101"), b("0101100"), b("1010001"), b("0001001")}, 7);
              std::vector<std::string> out;
              for (const auto& s : cw.sequences)
                  out.push_back(s.str());
              return join(out);
          });
    t.add("sliced", "index-based redundancy M=4, L=6", "3.28", [] {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << sliced::set_redundancy(16.0, 4, 6);
        return os.str();
    });

    // duplication
    const Seq acc = Seq::dna("ACCTAGGA");
    t.add("dup", "tandem CTA in ACCTAGGA", "ACCTACTAGGA",
          [&] { return dup::apply_dup(acc, {dup::DupKind::tandem, 3}, 2).str(); });
    t.add("dup", "end CTA in ACCTAGGA", "ACCTAGGACTA",
          [&] { return dup::apply_dup(acc, {dup::DupKind::end, 3}, 2).str(); });
    t.add("dup", "interspersed CTA in ACCTAGGA", "ACCTAGGCTAA",
          [&] { return dup::apply_dup(acc, {dup::DupKind::interspersed, 3}, 2, 7).str(); });
    t.add("dup", "reverse-complement CTA in ACCTAGGA", "ACCTATAGGGA",
          [&] { return dup::apply_dup(acc, {dup::DupKind::reverse_complement, 3}, 2).str(); });
    t.add("dup", "root of ACCTACTAGGA, k=3", "ACCTAGGA",
          [] { return dup::tandem_root_fixed_k(Seq::dna("ACCTACTAGGA"), 3).str(); });
    t.add("dup", "rc k=1 from 0, 3 steps: P(0111), P(0101)", "1/6,1/3", [] {
        const auto dist = dup::polya_exact_dist({b("0"), {dup::DupKind::reverse_complement, 1}, 3, 0});
        return dist.at(b("0111")).str() + "," + dist.at(b("0101")).str();
    });
    t.add("dup", "roots of 210121010", "{210,2101210}", [] {
        std::vector<std::string> out;
        for (const auto& r : dup::roots_unbounded_tandem(Seq::parse("210121010", alphabets::zq(3))).roots)
            out.push_back(r.str());
        return set_of(out);
    });
    t.add("dup", "binary roots for n <= 10 lie in {0,1,01,10,010,101}", "true", [] {
        const std::set<std::string> six{"0", "1", "01", "10", "010", "101"};
        for (std::size_t n = 1; n <= 10; ++n)
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                std::vector<Symbol> v(n);
                for (std::size_t i = 0; i < n; ++i)
                    v[i] = static_cast<Symbol>((m >> i) & 1);
                for (const auto& r : dup::roots_unbounded_tandem(Seq(v, alphabets::binary())).roots)
                    if (!six.count(r.str()))
                        return "false: " + r.str();
            }
        return std::string("true");
    });
    t.add("dup", "tandem k=2 from 0101 never shows 000 within 6 steps", "not found", [] {
        auto d = dup::fully_expressive_search({dup::DupKind::tandem, 2}, b("0101"), b("000"), 6);
        return d ? "found at " + std::to_string(*d) : std::string("not found");
    });

    return std::move(t.rows);
}

} // namespace dnacode::app
