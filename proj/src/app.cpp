#include "dnacode/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "dnacode/balls.hpp"
#include "dnacode/channel.hpp"
#include "dnacode/dup.hpp"
#include "dnacode/error.hpp"
#include "dnacode/mapping.hpp"
#include "dnacode/multidel.hpp"
#include "dnacode/random.hpp"
#include "dnacode/sliced.hpp"
#include "dnacode/vt.hpp"

namespace dnacode::app {

namespace {

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error("schema", what) {}
};

struct OpResult {
    json data = json::object();
    std::vector<std::string> text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool failed = false;
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

// --- parameters ------------------------------------------------------------

class Context {
public:
    Context(const ExperimentSpec& spec, std::string_view input) : spec(spec), input(input) {}

    const ExperimentSpec& spec;
    std::string_view input;

    const json& params() const { return spec.parameters; }
    bool has(const char* key) const { return params().contains(key) && !params()[key].is_null(); }

    std::size_t size(const char* key) const
    {
        if (!has(key))
            throw SchemaError("missing required parameter '" + std::string(key) + "'");
        const json& v = params()[key];
        if (v.is_number_unsigned())
            return v.get<std::size_t>();
        if (v.is_number_integer() && v.get<long long>() >= 0)
            return static_cast<std::size_t>(v.get<long long>());
        if (v.is_string()) {
            try {
                std::size_t pos = 0;
                const auto s = v.get<std::string>();
                const unsigned long long n = std::stoull(s, &pos);
                if (pos == s.size())
                    return static_cast<std::size_t>(n);
            } catch (const std::exception&) {
            }
        }
        throw SchemaError("parameter '" + std::string(key) + "' must be a non-negative integer");
    }
    std::size_t size(const char* key, std::size_t fallback) const { return has(key) ? size(key) : fallback; }

    double real(const char* key, double fallback) const
    {
        if (!has(key))
            return fallback;
        const json& v = params()[key];
        if (v.is_number())
            return v.get<double>();
        if (v.is_string()) {
            try {
                return std::stod(v.get<std::string>());
            } catch (const std::exception&) {
            }
        }
        throw SchemaError("parameter '" + std::string(key) + "' must be a number");
    }

    bool flag(const char* key) const
    {
        if (!has(key))
            return false;
        const json& v = params()[key];
        if (v.is_boolean())
            return v.get<bool>();
        if (v.is_string())
            return v == "true" || v == "1";
        if (v.is_number())
            return v.get<double>() != 0;
        throw SchemaError("parameter '" + std::string(key) + "' must be a boolean");
    }

    std::string str(const char* key) const
    {
        if (!has(key))
            throw SchemaError("missing required parameter '" + std::string(key) + "'");
        const json& v = params()[key];
        if (!v.is_string())
            throw SchemaError("parameter '" + std::string(key) + "' must be a string");
        return v.get<std::string>();
    }
    std::string str(const char* key, std::string fallback) const { return has(key) ? str(key) : fallback; }

    /// Raw text input: the "input" parameter, else stdin.
    std::string text() const { return has("input") ? str("input") : std::string(input); }

    /// One sequence per line, from "x" (string or list) or the input text.
    std::vector<std::string> lines() const
    {
        std::vector<std::string> out;
        if (has("x")) {
            const json& v = params()["x"];
            if (v.is_string())
                out.push_back(trim(v.get<std::string>()));
            else if (v.is_array())
                for (const auto& e : v) {
                    if (!e.is_string())
                        throw SchemaError("parameter 'x' must hold strings");
                    out.push_back(trim(e.get<std::string>()));
                }
            else
                throw SchemaError("parameter 'x' must be a string or a list of strings");
            return out;
        }
        std::istringstream is(text());
        std::string line;
        while (std::getline(is, line)) {
            auto t = trim(line);
            if (!t.empty())
                out.push_back(std::move(t));
        }
        if (out.empty())
            throw InvalidArgument("no input sequences");
        return out;
    }

    AlphabetPtr alphabet_for(std::string_view glyphs) const
    {
        if (!spec.alphabet.empty() && spec.alphabet != "auto")
            return alphabets::by_name(spec.alphabet);
        return alphabets::detect(glyphs);
    }

    Seq seq(std::string_view glyphs) const { return Seq::parse(glyphs, alphabet_for(glyphs)); }

    /// Symbols over Z_q, shown with the requested alphabet when it has q glyphs.
    Seq render(Seq s) const
    {
        if (!spec.alphabet.empty() && spec.alphabet != "auto") {
            auto a = alphabets::by_name(spec.alphabet);
            if (a->size() == s.q())
                return Seq(s.vec(), a);
        }
        return s;
    }
};

Seq bits(std::string_view s) { return Seq::binary(s); }

// maps each input line through f
OpResult per_line(const Context& ctx, const std::function<std::string(const std::string&)>& f)
{
    OpResult r;
    r.data["inputs"] = json::array();
    r.data["outputs"] = json::array();
    r.csv_header = {"input", "output"};
    for (const auto& line : ctx.lines()) {
        auto out = f(line);
        r.data["inputs"].push_back(line);
        r.data["outputs"].push_back(out);
        r.csv_rows.push_back({line, out});
        r.text.push_back(std::move(out));
    }
    return r;
}

dup::DupRule rule_of(const Context& ctx)
{
    return {dup::dup_kind_from_string(ctx.str("rule", "tandem")), ctx.size("k", 1)};
}

// --- seq -------------------------------------------------------------------

OpResult op_ball(const Context& ctx)
{
    const auto kind = ball_kind_from_string(ctx.str("kind", "substitution"));
    const std::size_t t = ctx.size("t", 1);
    OpResult r;
    r.data["balls"] = json::array();
    r.csv_header = {"center", "member"};
    const auto inputs = ctx.lines();
    for (const auto& line : inputs) {
        const auto ball = error_ball(ctx.seq(line), t, kind);
        json members = json::array();
        if (inputs.size() > 1)
            r.text.push_back("# " + line);
        for (const auto& m : ball.members) {
            members.push_back(m.str());
            r.text.push_back(m.str());
            r.csv_rows.push_back({line, m.str()});
        }
        r.data["balls"].push_back({{"center", line},
                                   {"kind", std::string(to_string(kind))},
                                   {"radius", t},
                                   {"size", ball.size()},
                                   {"members", members}});
    }
    return r;
}

OpResult op_channel(const Context& ctx)
{
    ChannelConfig cfg;
    cfg.deletions = ctx.size("deletions", 0);
    cfg.insertions = ctx.size("insertions", 0);
    cfg.substitutions = ctx.size("substitutions", 0);
    cfg.deletion_rate = ctx.real("deletion_rate", 0);
    cfg.insertion_rate = ctx.real("insertion_rate", 0);
    cfg.substitution_rate = ctx.real("substitution_rate", 0);
    std::size_t i = 0;
    return per_line(ctx, [&](const std::string& line) {
        auto c = cfg;
        c.seed = trial_seed(ctx.spec.seed, i++);
        return apply_channel(ctx.seq(line), c).str();
    });
}

// --- vt --------------------------------------------------------------------

OpResult op_vt_encode(const Context& ctx)
{
    const std::size_t n = ctx.size("n"), a = ctx.size("a", 0);
    auto r = per_line(ctx, [&](const std::string& l) { return vt::vt_encode(bits(l), n, a).str(); });
    r.data["data_length"] = vt::vt_data_length(n);
    return r;
}

OpResult op_vt_decode(const Context& ctx)
{
    const vt::VtParams p{ctx.size("n"), ctx.size("a", 0)};
    return per_line(ctx, [&](const std::string& l) { return vt::vt_decode(bits(l), p).str(); });
}

OpResult op_vt_syndrome(const Context& ctx)
{
    const vt::VtParams p{ctx.size("n"), ctx.size("a", 0)};
    return per_line(ctx, [&](const std::string& l) { return std::to_string(vt::vt_syndrome(bits(l), p)); });
}

OpResult op_vt_codebook(const Context& ctx)
{
    const vt::VtParams p{ctx.size("n"), ctx.size("a", 0)};
    OpResult r;
    r.csv_header = {"codeword"};
    json words = json::array();
    for (const auto& c : vt::vt_codebook(p)) {
        words.push_back(c.str());
        r.text.push_back(c.str());
        r.csv_rows.push_back({c.str()});
    }
    r.data["n"] = p.n;
    r.data["a"] = p.a;
    r.data["size"] = words.size();
    r.data["codewords"] = words;
    return r;
}

// --- multidel --------------------------------------------------------------

OpResult op_md_encode(const Context& ctx)
{
    const std::size_t t = ctx.size("t", 2);
    return per_line(ctx, [&](const std::string& l) { return multidel::encode_t_del(bits(l), t).str(); });
}

OpResult op_md_decode(const Context& ctx)
{
    const std::size_t t = ctx.size("t", 2), n = ctx.size("n");
    return per_line(ctx, [&](const std::string& l) { return multidel::decode_t_del(bits(l), t, n).str(); });
}

OpResult op_md_sums(const Context& ctx)
{
    const std::size_t t = ctx.size("t", 2);
    OpResult r;
    r.csv_header = {"input", "p", "residue", "modulus"};
    r.data["sums"] = json::array();
    for (const auto& line : ctx.lines()) {
        const auto s = multidel::weighted_sums(bits(line), t);
        std::vector<std::string> res, mods;
        for (std::size_t p = 0; p < s.residues.size(); ++p) {
            res.push_back(s.residues[p].str());
            mods.push_back(s.moduli[p].str());
            r.csv_rows.push_back({line, std::to_string(p), res.back(), mods.back()});
        }
        std::string text;
        for (std::size_t p = 0; p < res.size(); ++p)
            text += (p ? " " : "") + res[p];
        r.text.push_back(text);
        r.data["sums"].push_back({{"input", line}, {"residues", res}, {"moduli", mods}});
    }
    return r;
}

OpResult op_md_layout(const Context& ctx)
{
    const auto lay = multidel::t_del_layout(ctx.size("n"), ctx.size("t", 2));
    OpResult r;
    r.data = {{"n", lay.n},
              {"t", lay.t},
              {"checksum_bits", lay.checksum_bits},
              {"tail_symbols", lay.tail_symbols},
              {"codeword_length", lay.codeword_length},
              {"redundancy", lay.redundancy()}};
    r.text.push_back("redundancy " + std::to_string(lay.redundancy()) + " bits (checksums " +
                     std::to_string(lay.checksum_bits) + ", codeword length " +
                     std::to_string(lay.codeword_length) + ")");
    return r;
}

// --- sliced ----------------------------------------------------------------

struct SlicedScheme {
    bool data_indexed = true;
    std::size_t t = 1;
    sliced::IndexedProtection protect;
};

SlicedScheme scheme_of(const Context& ctx)
{
    SlicedScheme s;
    const auto name = ctx.str("scheme", "data");
    if (name == "data")
        s.data_indexed = true;
    else if (name == "index")
        s.data_indexed = false;
    else
        throw SchemaError("scheme must be 'data' or 'index'");
    s.t = ctx.size("t", s.data_indexed ? 1 : 0);
    s.protect.replication = ctx.size("replication", 1);
    s.protect.substitutions = s.data_indexed ? 0 : s.t;
    s.protect.payload_arbitration = ctx.flag("arbitration");
    return s;
}

std::size_t data_bits(const SlicedScheme& s, std::size_t M, std::size_t L)
{
    return s.data_indexed ? sliced::data_indexed_layout(M, L, s.t).data_bits
                          : sliced::indexed_layout(M, L, s.protect).data_bits;
}

double redundancy_of(const SlicedScheme& s, std::size_t M, std::size_t L)
{
    return s.data_indexed ? sliced::data_indexed_layout(M, L, s.t).redundancy()
                          : sliced::indexed_layout(M, L, s.protect).redundancy();
}

sliced::SlicedCodeword sliced_encode(const SlicedScheme& s, const Seq& d, std::size_t M, std::size_t L)
{
    return s.data_indexed ? sliced::encode_data_indexed(d, M, L, s.t) : sliced::encode_indexed(d, M, L, s.protect);
}

Seq sliced_decode(const SlicedScheme& s, const sliced::SlicedRead& r, std::size_t M, std::size_t L)
{
    return s.data_indexed ? sliced::decode_data_indexed(r, M, L, s.t) : sliced::decode_indexed(r, M, L, s.protect);
}

OpResult op_sliced_encode(const Context& ctx)
{
    const std::size_t M = ctx.size("M"), L = ctx.size("L");
    const auto s = scheme_of(ctx);
    const auto lines = ctx.lines();
    if (lines.size() != 1)
        throw InvalidArgument("sliced encode takes one data line");
    const auto cw = sliced_encode(s, bits(lines[0]), M, L);
    std::ostringstream os;
    sliced::write_vial(os, {cw.M, cw.L, cw.sequences});
    OpResult r;
    std::istringstream is(os.str());
    for (std::string line; std::getline(is, line);)
        r.text.push_back(line);
    json seqs = json::array();
    r.csv_header = {"sequence"};
    for (const auto& q : cw.sequences) {
        seqs.push_back(q.str());
        r.csv_rows.push_back({q.str()});
    }
    r.data = {{"M", M}, {"L", L}, {"sequences", seqs}, {"redundancy_bits", redundancy_of(s, M, L)}};
    return r;
}

OpResult op_sliced_decode(const Context& ctx)
{
    const std::size_t M = ctx.size("M"), L = ctx.size("L");
    const auto s = scheme_of(ctx);
    std::istringstream is(ctx.text());
    const auto vial = sliced::read_vial(is);
    const Seq d = sliced_decode(s, {vial.sequences}, M, L);
    OpResult r;
    r.text.push_back(d.str());
    r.data = {{"data", d.str()}, {"reads", vial.sequences.size()}};
    return r;
}

OpResult op_sliced_simulate(const Context& ctx)
{
    const std::size_t M = ctx.size("M"), L = ctx.size("L");
    const auto s = scheme_of(ctx);
    const std::size_t trials = ctx.size("trials", 1);
    const std::size_t k = data_bits(s, M, L);
    const double red = redundancy_of(s, M, L);
    OpResult r;
    r.csv_header = {"seed", "losses", "substitutions", "success", "redundancy_bits"};
    r.data["trials"] = json::array();
    std::size_t ok = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = trial_seed(ctx.spec.seed, i);
        Rng rng(seed);
        std::vector<Symbol> d(k);
        for (auto& x : d)
            x = static_cast<Symbol>(rng.below(2));
        const Seq data(d, alphabets::binary());
        sliced::SlicedChannelConfig cfg;
        cfg.losses = ctx.size("losses", 0);
        cfg.substitutions = ctx.size("substitutions", 0);
        cfg.max_deletions = ctx.size("max_deletions", 0);
        cfg.max_insertions = ctx.size("max_insertions", 0);
        cfg.seed = seed;
        const auto cw = sliced_encode(s, data, M, L);
        const auto reads = sliced::sliced_channel(cw, cfg, rng);
        json trial = {{"seed", seed},
                      {"losses", cfg.losses},
                      {"substitutions", cfg.substitutions},
                      {"redundancy_bits", red}};
        bool success = false;
        try {
            success = sliced_decode(s, reads, M, L) == data;
        } catch (const Error& e) {
            trial["error"] = e.code();
        }
        trial["success"] = success;
        ok += success;
        r.data["trials"].push_back(trial);
        r.csv_rows.push_back({std::to_string(seed), std::to_string(cfg.losses), std::to_string(cfg.substitutions),
                              success ? "true" : "false", fmt(red)});
        r.text.push_back("seed " + std::to_string(seed) + ": " + (success ? "success" : "failure"));
    }
    r.data["successes"] = ok;
    r.data["data_bits"] = k;
    r.text.push_back(std::to_string(ok) + "/" + std::to_string(trials) + " decoded");
    return r;
}

OpResult op_sliced_redundancy(const Context& ctx)
{
    const std::size_t M = ctx.size("M"), L = ctx.size("L");
    OpResult r;
    if (ctx.has("code_size_log2")) {
        const double v = sliced::set_redundancy(ctx.real("code_size_log2", 0), M, L);
        r.data = {{"redundancy_bits", v}};
        r.text.push_back(fmt(v));
        return r;
    }
    const std::size_t t = ctx.size("t", 1);
    r.csv_header = {"scheme", "data_bits", "redundancy_bits"};
    auto row = [&](const std::string& name, std::size_t k, double red) {
        r.data["schemes"].push_back({{"scheme", name}, {"data_bits", k}, {"redundancy_bits", red}});
        r.csv_rows.push_back({name, std::to_string(k), fmt(red)});
        r.text.push_back(name + ": " + std::to_string(k) + " data bits, redundancy " + fmt(red) + " bits");
    };
    const auto plain = sliced::indexed_layout(M, L);
    row("index", plain.data_bits, plain.redundancy());
    if (t > 0) {
        sliced::IndexedProtection p;
        p.substitutions = t;
        const auto prot = sliced::indexed_layout(M, L, p);
        row("index-t" + std::to_string(t), prot.data_bits, prot.redundancy());
    }
    const auto di = sliced::data_indexed_layout(M, L, t);
    row("data-t" + std::to_string(t) + " (p=" + std::to_string(di.p) + ")", di.data_bits, di.redundancy());
    return r;
}

OpResult op_sliced_reachable(const Context& ctx)
{
    if (!ctx.has("codeword") || !ctx.params()["codeword"].is_array())
        throw SchemaError("parameter 'codeword' must be a list of sequences");
    std::vector<Seq> seqs;
    for (const auto& e : ctx.params()["codeword"])
        seqs.push_back(bits(e.get<std::string>()));
    const std::size_t L = seqs.empty() ? 0 : seqs.front().size();
    const auto cw = sliced::SlicedCodeword::from(seqs, L);
    sliced::SlicedRead read;
    for (const auto& l : ctx.lines())
        read.reads.push_back(bits(l));
    sliced::SlicedChannelConfig cfg;
    cfg.losses = ctx.size("losses", 0);
    cfg.substitutions = ctx.size("substitutions", 0);
    cfg.max_deletions = ctx.size("max_deletions", 0);
    cfg.max_insertions = ctx.size("max_insertions", 0);
    const bool ok = sliced::sliced_reachable(cw, read, cfg);
    OpResult r;
    r.data = {{"reachable", ok}};
    r.text.push_back(ok ? "reachable" : "unreachable");
    return r;
}

// --- dup -------------------------------------------------------------------

OpResult op_dup_apply(const Context& ctx)
{
    const auto rule = rule_of(ctx);
    const std::size_t pos = ctx.size("pos");
    std::optional<std::size_t> ins;
    if (ctx.has("insert"))
        ins = ctx.size("insert");
    return per_line(ctx, [&](const std::string& l) { return dup::apply_dup(ctx.seq(l), rule, pos, ins).str(); });
}

OpResult op_dup_simulate(const Context& ctx)
{
    dup::PolyaConfig cfg{ctx.seq(ctx.str("x")), rule_of(ctx), ctx.size("steps"), ctx.spec.seed};
    OpResult r;
    if (ctx.has("emit_kmer_freq")) {
        const auto rows = dup::polya_kmer_series(cfg, ctx.size("emit_kmer_freq"), ctx.size("every", 100));
        r.csv_header = {"step", "kmer", "freq"};
        json series = json::array();
        for (const auto& row : rows) {
            r.csv_rows.push_back({std::to_string(row.step), row.kmer, fmt(row.freq)});
            r.text.push_back(std::to_string(row.step) + " " + row.kmer + " " + fmt(row.freq));
            series.push_back({{"step", row.step}, {"kmer", row.kmer}, {"freq", row.freq}});
        }
        r.data["series"] = series;
    }
    const Seq final = dup::polya_simulate(cfg);
    r.data["final"] = final.str();
    r.data["length"] = final.size();
    if (!ctx.has("emit_kmer_freq")) {
        r.text.push_back(final.str());
        r.csv_header = {"final"};
        r.csv_rows.push_back({final.str()});
    }
    return r;
}

OpResult op_dup_exact(const Context& ctx)
{
    dup::PolyaConfig cfg{ctx.seq(ctx.str("x")), rule_of(ctx), ctx.size("steps"), 0};
    const auto dist = dup::polya_exact_dist(cfg);
    OpResult r;
    r.csv_header = {"sequence", "probability"};
    json rows = json::array();
    for (const auto& [w, p] : dist) {
        rows.push_back({{"sequence", w.str()}, {"probability", p.str()}});
        r.csv_rows.push_back({w.str(), p.str()});
        r.text.push_back(w.str() + " " + p.str());
    }
    const double h = dup::entropy_bits(dist);
    r.data = {{"distribution", rows},
              {"entropy_bits", h},
              {"entropy_per_step", cfg.steps ? h / double(cfg.steps) : 0.0}};
    r.text.push_back("entropy " + fmt(h) + " bits");
    return r;
}

OpResult op_dup_root(const Context& ctx)
{
    const std::size_t k = ctx.size("k", 1);
    if (k == 0)
        return per_line(ctx, [&](const std::string& l) {
            std::string out;
            for (const auto& root : dup::roots_unbounded_tandem(ctx.seq(l)).roots)
                out += (out.empty() ? "" : " ") + root.str();
            return out;
        });
    return per_line(ctx, [&](const std::string& l) { return dup::tandem_root_fixed_k(ctx.seq(l), k).str(); });
}

OpResult op_dup_roots(const Context& ctx)
{
    OpResult r;
    r.csv_header = {"input", "root", "min_steps"};
    r.data["reports"] = json::array();
    for (const auto& line : ctx.lines()) {
        const auto rep = dup::roots_unbounded_tandem(ctx.seq(line));
        json roots = json::array();
        std::string text;
        for (const auto& root : rep.roots) {
            roots.push_back(root.str());
            text += (text.empty() ? "" : " ") + root.str();
            r.csv_rows.push_back({line, root.str(), std::to_string(rep.min_steps)});
        }
        r.text.push_back(text);
        r.data["reports"].push_back({{"input", line}, {"roots", roots}, {"min_steps", rep.min_steps}});
    }
    return r;
}

OpResult op_dup_capacity(const Context& ctx)
{
    const auto prof = dup::capacity_profile(ctx.seq(ctx.str("x")), rule_of(ctx), ctx.size("nmax"));
    OpResult r;
    r.csv_header = {"n", "count", "rate"};
    json rows = json::array();
    for (const auto& pt : prof) {
        rows.push_back({{"n", pt.n}, {"count", pt.count}, {"rate", pt.rate}});
        r.csv_rows.push_back({std::to_string(pt.n), std::to_string(pt.count), fmt(pt.rate)});
        r.text.push_back(std::to_string(pt.n) + " " + std::to_string(pt.count) + " " + fmt(pt.rate));
    }
    r.data["profile"] = rows;
    return r;
}

OpResult op_dup_count(const Context& ctx)
{
    const auto c = dup::descendant_count(ctx.seq(ctx.str("x")), rule_of(ctx), ctx.size("n"));
    OpResult r;
    r.data = {{"count", c}};
    r.text.push_back(std::to_string(c));
    return r;
}

OpResult op_dup_irreducible(const Context& ctx)
{
    const std::size_t n = ctx.size("n"), q = ctx.size("q", 2), k = ctx.size("k", 1);
    const auto count = dup::irreducible_count(n, q, k);
    OpResult r;
    r.data = {{"n", n}, {"q", q}, {"k", k}, {"count", count.str()}, {"data_bits", dup::dup_code_data_bits(n, q, k)}};
    if (n > 0)
        r.data["rate"] = dup::irreducible_rate(n, q, k);
    r.text.push_back("count " + count.str() + (n > 0 ? ", rate " + fmt(dup::irreducible_rate(n, q, k)) : ""));
    if (ctx.flag("list")) {
        json words = json::array();
        r.csv_header = {"word"};
        for (const auto& w : dup::irreducible_words(n, q, k)) {
            const auto s = ctx.render(w).str();
            words.push_back(s);
            r.text.push_back(s);
            r.csv_rows.push_back({s});
        }
        r.data["words"] = words;
    }
    return r;
}

OpResult op_dup_express(const Context& ctx)
{
    const auto d = dup::fully_expressive_search(rule_of(ctx), ctx.seq(ctx.str("x")), ctx.seq(ctx.str("y")),
                                                ctx.size("depth", 6));
    OpResult r;
    r.data = {{"found", d.has_value()}};
    if (d)
        r.data["depth"] = *d;
    r.text.push_back(d ? "found at depth " + std::to_string(*d) : "not found within depth bound");
    return r;
}

OpResult op_dup_f(const Context& ctx)
{
    const std::size_t n = ctx.size("n");
    const auto f = dup::distance_to_root_table(n);
    OpResult r;
    r.csv_header = {"n", "f", "f_over_n"};
    json rows = json::array();
    for (std::size_t i = 1; i <= n; ++i) {
        const double ratio = double(f[i]) / double(i);
        rows.push_back({{"n", i}, {"f", f[i]}, {"f_over_n", ratio}});
        r.csv_rows.push_back({std::to_string(i), std::to_string(f[i]), fmt(ratio)});
        r.text.push_back(std::to_string(i) + " " + std::to_string(f[i]) + " " + fmt(ratio));
    }
    r.data["table"] = rows;
    return r;
}

OpResult op_dup_derivative(const Context& ctx)
{
    const std::size_t k = ctx.size("k", 1);
    return per_line(ctx, [&](const std::string& l) { return dup::derivative(ctx.seq(l), k).d.str(); });
}

OpResult op_dup_integrate(const Context& ctx)
{
    const std::size_t k = ctx.size("k", 1), q = ctx.size("q", 2);
    return per_line(ctx, [&](const std::string& l) {
        dup::DerivativeSeq d{Seq::parse(l, alphabets::zq(q)), k, q, nullptr};
        return ctx.render(dup::integrate(d)).str();
    });
}

OpResult op_dup_encode(const Context& ctx)
{
    const std::size_t n = ctx.size("n"), q = ctx.size("q", 2), k = ctx.size("k", 1);
    auto r = per_line(ctx, [&](const std::string& l) { return ctx.render(dup::dup_code_encode(bits(l), n, q, k)).str(); });
    r.data["data_bits"] = dup::dup_code_data_bits(n, q, k);
    return r;
}

OpResult op_dup_decode(const Context& ctx)
{
    const std::size_t q = ctx.size("q", 2), k = ctx.size("k", 1);
    return per_line(ctx, [&](const std::string& l) {
        Seq y = ctx.seq(l);
        if (y.q() != q)
            y = Seq(y.vec(), alphabets::zq(q));
        return dup::dup_code_decode(y, q, k).str();
    });
}

OpResult op_dup_kmer(const Context& ctx)
{
    const std::size_t m = ctx.size("m", 2);
    OpResult r;
    r.csv_header = {"input", "kmer", "freq"};
    r.data["frequencies"] = json::array();
    for (const auto& line : ctx.lines()) {
        json f = json::object();
        for (const auto& [kmer, v] : dup::kmer_frequencies(ctx.seq(line), m)) {
            f[kmer] = v;
            r.csv_rows.push_back({line, kmer, fmt(v)});
            r.text.push_back(kmer + " " + fmt(v));
        }
        r.data["frequencies"].push_back({{"input", line}, {"freq", f}});
    }
    return r;
}

// --- reproduce -------------------------------------------------------------

OpResult op_reproduce(const Context& ctx)
{
    ReproduceConfig cfg;
    cfg.vt_modulus_skew = ctx.size("vt_modulus_skew", 0);
    OpResult r;
    r.csv_header = {"group", "name", "expected", "computed", "pass"};
    json rows = json::array();
    std::size_t failed = 0;
    for (const auto& row : reproduce_examples(cfg)) {
        failed += !row.pass;
        rows.push_back({{"group", row.group},
                        {"name", row.name},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"pass", row.pass}});
        r.csv_rows.push_back({row.group, row.name, row.expected, row.computed, row.pass ? "true" : "false"});
        std::string line = std::string(row.pass ? "PASS" : "FAIL") + "  [" + row.group + "] " + row.name;
        if (!row.pass)
            line += "  expected " + row.expected + ", computed " + row.computed;
        r.text.push_back(line);
    }
    r.text.push_back(std::to_string(rows.size() - failed) + "/" + std::to_string(rows.size()) + " rows pass");
    r.data = {{"rows", rows}, {"failed", failed}};
    r.failed = failed > 0;
    return r;
}

// --- registry --------------------------------------------------------------

struct Entry {
    OperationInfo info;
    std::function<OpResult(const Context&)> handler;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        auto add = [&](std::string module, std::string op, std::vector<std::string> params, bool input,
                       std::string summary, std::function<OpResult(const Context&)> h) {
            if (input) {
                params.push_back("x");
                params.push_back("input");
            }
            e.push_back({{std::move(module), std::move(op), std::move(params), input, std::move(summary)}, std::move(h)});
        };
        const std::vector<std::string> rates{"deletions", "insertions", "substitutions",
                                             "deletion_rate", "insertion_rate", "substitution_rate"};
        add("seq", "ball", {"kind", "t"}, true, "error ball around each input", op_ball);
        add("seq", "to-dna", {}, true, "bits to nucleotides",
            [](const Context& c) { return per_line(c, [](const std::string& l) { return bits_to_dna(bits(l)).str(); }); });
        add("seq", "to-bits", {}, true, "nucleotides to bits",
            [](const Context& c) { return per_line(c, [](const std::string& l) { return dna_to_bits(Seq::dna(l)).str(); }); });
        add("seq", "rep3-encode", {}, true, "repeat every bit three times", [](const Context& c) {
            return per_line(c, [](const std::string& l) { return repetition3_encode(bits(l)).str(); });
        });
        add("seq", "rep3-decode", {}, true, "majority-decode the repetition-3 code", [](const Context& c) {
            return per_line(c, [](const std::string& l) { return repetition3_decode(bits(l)).str(); });
        });
        add("seq", "channel", rates, true, "point channel with exact counts and rates", op_channel);

        add("vt", "encode", {"n", "a"}, true, "systematic encoder", op_vt_encode);
        add("vt", "decode", {"n", "a"}, true, "single-deletion decoder", op_vt_decode);
        add("vt", "syndrome", {"n", "a"}, true, "weighted checksum residue", op_vt_syndrome);
        add("vt", "codebook", {"n", "a"}, false, "all codewords", op_vt_codebook);

        add("multidel", "encode", {"t"}, true, "t-deletion pipeline encoder", op_md_encode);
        add("multidel", "decode", {"t", "n"}, true, "t-deletion pipeline decoder", op_md_decode);
        add("multidel", "sums", {"t"}, true, "weighted checksums of constrained words", op_md_sums);
        add("multidel", "layout", {"n", "t"}, false, "pipeline redundancy", op_md_layout);

        const std::vector<std::string> scheme{"M", "L", "scheme", "t", "replication", "arbitration"};
        auto with = [](std::vector<std::string> a, std::vector<std::string> b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };
        add("sliced", "encode", scheme, true, "data bits to a set of sequences", op_sliced_encode);
        add("sliced", "decode", scheme, true, "vial of reads to data bits", op_sliced_decode);
        add("sliced", "simulate",
            with(scheme, {"trials", "losses", "substitutions", "max_deletions", "max_insertions"}), false,
            "encode, corrupt and decode random data", op_sliced_simulate);
        add("sliced", "redundancy", {"M", "L", "t", "code_size_log2"}, false, "set redundancy of each scheme",
            op_sliced_redundancy);
        add("sliced", "reachable", {"codeword", "losses", "substitutions", "max_deletions", "max_insertions"}, true,
            "whether the reads can come from the codeword", op_sliced_reachable);

        const std::vector<std::string> rk{"rule", "k"};
        add("dup", "apply", with(rk, {"pos", "insert"}), true, "one duplication", op_dup_apply);
        add("dup", "simulate", with(rk, {"x", "steps", "emit_kmer_freq", "every"}), false,
            "random duplication trajectory", op_dup_simulate);
        add("dup", "exact-dist", with(rk, {"x", "steps"}), false, "exact outcome distribution", op_dup_exact);
        add("dup", "root", {"k"}, true, "root under tandem de-duplication (k=0: any length)", op_dup_root);
        add("dup", "roots", {}, true, "all roots under tandem de-duplication of any length", op_dup_roots);
        add("dup", "capacity", with(rk, {"x", "nmax"}), false, "descendant counts per length", op_dup_capacity);
        add("dup", "count", with(rk, {"x", "n"}), false, "descendants of one length", op_dup_count);
        add("dup", "irreducible", {"n", "q", "k", "list"}, false, "irreducible words", op_dup_irreducible);
        add("dup", "express", with(rk, {"x", "y", "depth"}), false, "bounded expressiveness search",
            op_dup_express);
        add("dup", "f", {"n"}, false, "maximum distance to the root", op_dup_f);
        add("dup", "derivative", {"k"}, true, "k-step discrete derivative", op_dup_derivative);
        add("dup", "integrate", {"k", "q"}, true, "inverse of the derivative", op_dup_integrate);
        add("dup", "encode", {"n", "q", "k"}, true, "duplication-correcting encoder", op_dup_encode);
        add("dup", "decode", {"q", "k"}, true, "duplication-correcting decoder", op_dup_decode);
        add("dup", "kmer", {"m"}, true, "substring frequencies", op_dup_kmer);

        add("reproduce", "table", {"vt_modulus_skew"}, false, "worked-example regression table", op_reproduce);
        return e;
    }();
    return entries;
}

const Entry& find(const ExperimentSpec& spec)
{
    for (const auto& e : registry())
        if (e.info.module == spec.module && e.info.operation == spec.operation)
            return e;
    throw Error("unknown_operation", "unknown operation '" + spec.module + " " + spec.operation + "'");
}

void check_schema(const Entry& e, const ExperimentSpec& spec)
{
    if (!spec.parameters.is_object())
        throw SchemaError("parameters must be an object");
    for (const auto& [key, value] : spec.parameters.items())
        if (std::find(e.info.parameters.begin(), e.info.parameters.end(), key) == e.info.parameters.end())
            throw SchemaError("operation '" + spec.module + " " + spec.operation + "' has no parameter '" + key +
                              "'");
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render(const ExperimentSpec& spec, const OpResult& r)
{
    std::ostringstream os;
    switch (spec.format) {
    case Format::text:
        for (const auto& line : r.text)
            os << line << '\n';
        break;
    case Format::json: {
        json report = {{"spec", spec.to_json()}, {"seed", spec.seed}, {"result", r.data}};
        os << report.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        auto header = r.csv_header;
        auto rows = r.csv_rows;
        if (header.empty()) {
            header = {"key", "value"};
            for (const auto& [k, v] : r.data.items())
                rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
        }
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << csv_cell(header[i]);
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        break;
    }
    }
    return os.str();
}

struct Rendered {
    std::string report;
    bool failed = false;
};

Rendered run_impl(const ExperimentSpec& spec, std::string_view input)
{
    const auto& entry = find(spec);
    check_schema(entry, spec);
    const Context ctx(spec, input);
    const OpResult r = entry.handler(ctx);
    return {render(spec, r), r.failed};
}

} // namespace

Format format_from_string(std::string_view name)
{
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw InvalidArgument("format must be text, json or csv");
}

std::string to_string(Format f)
{
    switch (f) {
    case Format::text:
        return "text";
    case Format::json:
        return "json";
    case Format::csv:
        return "csv";
    }
    return "text";
}

json ExperimentSpec::to_json() const
{
    return {{"module", module},   {"operation", operation},      {"parameters", parameters},
            {"seed", seed},       {"format", app::to_string(format)}, {"output", output},
            {"alphabet", alphabet}};
}

ExperimentSpec ExperimentSpec::from_json(const json& j)
{
    if (!j.is_object())
        throw SchemaError("experiment spec must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "module" && key != "operation" && key != "parameters" && key != "seed" && key != "format" &&
            key != "output" && key != "alphabet")
            throw SchemaError("unknown spec field '" + key + "'");
    ExperimentSpec s;
    try {
        s.module = j.at("module").get<std::string>();
        s.operation = j.at("operation").get<std::string>();
        if (j.contains("parameters"))
            s.parameters = j.at("parameters");
        if (j.contains("seed"))
            s.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("format"))
            s.format = format_from_string(j.at("format").get<std::string>());
        if (j.contains("output"))
            s.output = j.at("output").get<std::string>();
        if (j.contains("alphabet"))
            s.alphabet = j.at("alphabet").get<std::string>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed experiment spec: ") + e.what());
    }
    return s;
}

const std::vector<OperationInfo>& operations()
{
    static const std::vector<OperationInfo> infos = [] {
        std::vector<OperationInfo> out;
        for (const auto& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

bool needs_input(const ExperimentSpec& spec)
{
    const auto& e = find(spec);
    return e.info.reads_input && !spec.parameters.contains("x") && !spec.parameters.contains("input");
}

std::string run(const ExperimentSpec& spec, std::string_view input) { return run_impl(spec, input).report; }

int execute(const ExperimentSpec& spec, std::string_view input, std::ostream& out, std::ostream& err)
{
    auto error = [&](const std::string& code, const std::string& message, int status, json extra = {}) {
        json obj = {{"error", {{"code", code}, {"message", message}, {"module", spec.module},
                               {"operation", spec.operation}}}};
        if (!extra.is_null())
            obj["error"].update(extra);
        err << obj.dump() << '\n';
        return status;
    };
    try {
        const auto r = run_impl(spec, input);
        if (spec.output.empty()) {
            out << r.report;
        } else {
            std::ofstream f(spec.output, std::ios::binary);
            if (!f)
                return error("io", "cannot write report to " + spec.output, 1);
            f << r.report;
        }
        return r.failed ? 1 : 0;
    } catch (const dup::PartialResult& e) {
        // the last complete level is still useful
        return error(e.code(), e.what(), 1, {{"partial", {{"length", e.last_length}, {"count", e.last_count}}}});
    } catch (const Error& e) {
        const bool request = e.code() == "schema" || e.code() == "unknown_operation";
        return error(e.code(), e.what(), request ? 2 : 1);
    } catch (const json::exception& e) {
        return error("schema", e.what(), 2);
    } catch (const std::exception& e) {
        return error("internal", e.what(), 1);
    }
}

} // namespace dnacode::app
