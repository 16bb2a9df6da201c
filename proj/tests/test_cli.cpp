#include <doctest.h>

#include <sstream>

#include "dnacode/app.hpp"
#include "dnacode/error.hpp"

using namespace dnacode::app;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome exec(const ExperimentSpec& spec, std::string_view input = {})
{
    std::ostringstream out, err;
    const int status = execute(spec, input, out, err);
    return {status, out.str(), err.str()};
}

ExperimentSpec make(std::string module, std::string op, json params = json::object())
{
    ExperimentSpec s;
    s.module = std::move(module);
    s.operation = std::move(op);
    s.parameters = std::move(params);
    return s;
}

} // namespace

TEST_CASE("single-deletion decode through the dispatcher")
{
    const auto r = exec(make("vt", "decode", {{"n", 6}, {"a", 0}}), "00110\n");
    CHECK(r.status == 0);
    CHECK(r.out == "001100\n");
    CHECK(r.err.empty());
}

TEST_CASE("fixed-length tandem root over nucleotides")
{
    auto spec = make("dup", "root", {{"k", "3"}});
    spec.alphabet = "dna";
    const auto r = exec(spec, "ACCTACTAGGA\n");
    CHECK(r.status == 0);
    CHECK(r.out == "ACCTAGGA\n");
}

TEST_CASE("identical specs give identical reports")
{
    auto sim = make("dup", "simulate", {{"rule", "rc"}, {"k", 2}, {"x", "00"}, {"steps", 300}, {"emit_kmer_freq", 2}});
    sim.seed = 11;
    sim.format = Format::csv;
    const auto a = exec(sim), b = exec(sim);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("step,kmer,freq\n", 0) == 0);

    auto other = sim;
    other.seed = 12;
    CHECK(exec(other).out != a.out);

    auto sl = make("sliced", "simulate", {{"M", 8}, {"L", 24}, {"trials", 4}, {"substitutions", 1}});
    sl.seed = 3;
    sl.format = Format::json;
    const auto c = exec(sl), d = exec(sl);
    CHECK(c.out == d.out);
    const auto report = json::parse(c.out);
    CHECK(report["seed"] == 3);
    CHECK(report["spec"]["module"] == "sliced");
    CHECK(report["result"]["trials"].size() == 4);
    CHECK(report["result"]["successes"] == 4);
}

TEST_CASE("specs round-trip through JSON")
{
    auto s = make("multidel", "sums", {{"t", 2}});
    s.seed = 99;
    s.format = Format::csv;
    s.alphabet = "binary";
    const auto back = ExperimentSpec::from_json(s.to_json());
    CHECK(back.to_json() == s.to_json());
    CHECK_THROWS_AS(ExperimentSpec::from_json(json{{"module", "vt"}}), dnacode::Error);
    CHECK_THROWS_AS(ExperimentSpec::from_json(json{{"module", "vt"}, {"operation", "decode"}, {"colour", 1}}),
                    dnacode::Error);
}

TEST_CASE("failures produce machine-readable errors")
{
    SUBCASE("unknown operation")
    {
        const auto r = exec(make("vt", "compress"));
        CHECK(r.status == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "unknown_operation");
        CHECK(r.out.empty());
    }
    SUBCASE("unknown parameter")
    {
        const auto r = exec(make("vt", "decode", {{"n", 6}, {"radius", 2}}), "00110\n");
        CHECK(r.status == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "schema");
    }
    SUBCASE("missing parameter")
    {
        const auto r = exec(make("vt", "decode"), "00110\n");
        CHECK(r.status == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "schema");
    }
    SUBCASE("ill-typed parameter")
    {
        const auto r = exec(make("vt", "decode", {{"n", "six"}}), "00110\n");
        CHECK(r.status == 2);
    }
    SUBCASE("operation error passes through")
    {
        const auto r = exec(make("vt", "decode", {{"n", 6}}), "0011\n");
        CHECK(r.status == 1);
        const auto e = json::parse(r.err)["error"];
        CHECK(e["code"] == "invalid_argument");
        CHECK(e["operation"] == "decode");
    }
    SUBCASE("run() throws instead")
    {
        CHECK_THROWS_AS(run(make("vt", "compress")), dnacode::Error);
    }
}

TEST_CASE("operations with worked examples are reachable")
{
    CHECK(exec(make("multidel", "sums"), "101001\n").out == "3 28 106\n");
    CHECK(exec(make("seq", "to-dna", {{"x", "00101001"}})).out == "AGGC\n");
    CHECK(exec(make("seq", "ball", {{"t", 1}}), "0000\n").out == "0000\n0001\n0010\n0100\n1000\n");
    CHECK(exec(make("dup", "roots"), "210121010\n").out == "210 2101210\n");
    CHECK(exec(make("dup", "apply", {{"rule", "interspersed"}, {"k", 3}, {"pos", 2}, {"insert", 7}}), "ACCTAGGA\n")
              .out == "ACCTAGGCTAA\n");
    CHECK(exec(make("dup", "express", {{"k", 2}, {"x", "0101"}, {"y", "000"}})).out ==
          "not found within depth bound\n");
    CHECK(exec(make("sliced", "reachable",
                    {{"codeword", {"110001", "100100", "101010", "111111"}},
                     {"losses", 1},
                     {"substitutions", 1},
                     {"max_deletions", 1},
                     {"max_insertions", 1}}),
               "100000\n1100001\n10101\n")
              .out == "reachable\n");

    const auto exact = exec(make("dup", "exact-dist", {{"rule", "rc"}, {"x", "0"}, {"steps", 3}})).out;
    CHECK(exact.find("0111 1/6\n") != std::string::npos);
    CHECK(exact.find("0101 1/3\n") != std::string::npos);

    const auto cap = exec(make("dup", "capacity", {{"x", "01"}, {"nmax", 6}})).out;
    CHECK(cap.rfind("2 1 0\n3 2 ", 0) == 0);

    auto vial = exec(make("sliced", "encode", {{"M", 8}, {"L", 24}}), std::string(141, '1') + "\n");
    REQUIRE(vial.status == 0);
    CHECK(exec(make("sliced", "decode", {{"M", 8}, {"L", 24}}), vial.out).out == std::string(141, '1') + "\n");

    const auto enc = exec(make("dup", "encode", {{"n", 8}, {"k", 2}}), "101101\n");
    REQUIRE(enc.status == 0);
    CHECK(exec(make("dup", "decode", {{"k", 2}}), enc.out).out == "101101\n");

    for (const auto& op : operations())
        CHECK_MESSAGE(!op.summary.empty(), op.module << " " << op.operation);
}

TEST_CASE("worked-example table")
{
    const auto rows = reproduce_examples();
    REQUIRE(rows.size() > 20);
    bool weighted = false;
    for (const auto& r : rows) {
        CHECK_MESSAGE(r.pass, r.group << ": " << r.name << " expected " << r.expected << " computed " << r.computed);
        weighted |= r.expected == "3,28,106";
    }
    CHECK(weighted);
    CHECK(exec(make("reproduce", "table")).status == 0);
}

TEST_CASE("a corrupted VT modulus fails exactly the VT rows")
{
    ReproduceConfig bad;
    bad.vt_modulus_skew = 1;
    const auto rows = reproduce_examples(bad);
    std::size_t vt_rows = 0;
    for (const auto& r : rows) {
        if (r.group == "vt") {
            ++vt_rows;
            CHECK_MESSAGE(!r.pass, r.name);
        } else {
            CHECK_MESSAGE(r.pass, r.name);
        }
    }
    CHECK(vt_rows >= 3);

    const auto r = exec(make("reproduce", "table", {{"vt_modulus_skew", 1}}));
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL  [vt]") != std::string::npos);
    CHECK(r.out.find("FAIL  [seq]") == std::string::npos);
}
