#include "dnacode/dup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace dnacode::dup {

namespace {

void require_k(std::size_t k)
{
    if (k == 0)
        throw InvalidArgument("duplication length k must be positive");
}

bool contains(const Seq& hay, const Seq& needle)
{
    const auto h = hay.symbols();
    const auto n = needle.symbols();
    return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

} // namespace

std::string to_string(DupKind kind)
{
    switch (kind) {
    case DupKind::tandem:
        return "tandem";
    case DupKind::end:
        return "end";
    case DupKind::interspersed:
        return "interspersed";
    case DupKind::reverse_complement:
        return "rc";
    }
    return "?";
}

DupKind dup_kind_from_string(std::string_view name)
{
    if (name == "tandem")
        return DupKind::tandem;
    if (name == "end")
        return DupKind::end;
    if (name == "interspersed")
        return DupKind::interspersed;
    if (name == "rc" || name == "reverse_complement" || name == "reverse-complement")
        return DupKind::reverse_complement;
    throw InvalidArgument("unknown duplication rule '" + std::string(name) + "'");
}

Seq apply_dup(const Seq& x, const DupRule& rule, std::size_t src_pos, std::optional<std::size_t> insert_pos)
{
    require_k(rule.k);
    if (src_pos > x.size() || rule.k > x.size() - src_pos)
        throw InvalidArgument("duplication window [" + std::to_string(src_pos) + ", " +
                              std::to_string(src_pos + rule.k) + ") is outside a word of length " +
                              std::to_string(x.size()));
    const auto& s = x.vec();
    std::vector<Symbol> copy(s.begin() + static_cast<std::ptrdiff_t>(src_pos),
                             s.begin() + static_cast<std::ptrdiff_t>(src_pos + rule.k));
    std::size_t at = src_pos + rule.k;
    switch (rule.kind) {
    case DupKind::tandem:
        break;
    case DupKind::end:
        at = s.size();
        break;
    case DupKind::interspersed:
        if (!insert_pos)
            throw InvalidArgument("interspersed duplication needs an insertion position");
        if (*insert_pos > s.size())
            throw InvalidArgument("insertion position outside the word");
        at = *insert_pos;
        break;
    case DupKind::reverse_complement: {
        const auto& alpha = *x.alphabet();
        std::reverse(copy.begin(), copy.end());
        for (auto& c : copy)
            c = alpha.complement(c);
        break;
    }
    }
    std::vector<Symbol> out;
    out.reserve(s.size() + rule.k);
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), copy.begin(), copy.end());
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(at), s.end());
    return x.with(std::move(out));
}

std::size_t site_count(std::size_t length, const DupRule& rule)
{
    require_k(rule.k);
    if (length < rule.k)
        return 0;
    const std::size_t sources = length - rule.k + 1;
    return rule.kind == DupKind::interspersed ? sources * (length + 1) : sources;
}

Seq apply_site(const Seq& x, const DupRule& rule, std::size_t site)
{
    if (site >= site_count(x.size(), rule))
        throw InvalidArgument("duplication site out of range");
    if (rule.kind == DupKind::interspersed)
        return apply_dup(x, rule, site / (x.size() + 1), site % (x.size() + 1));
    return apply_dup(x, rule, site);
}

std::set<Seq> children(const Seq& x, const DupRule& rule)
{
    std::set<Seq> out;
    const std::size_t sites = site_count(x.size(), rule);
    for (std::size_t i = 0; i < sites; ++i)
        out.insert(apply_site(x, rule, i));
    return out;
}

// --- descendant cones ------------------------------------------------------

std::size_t default_max_states()
{
    if (const char* env = std::getenv("DNACODE_MAX_STATES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

namespace {

// Calls visit(length, level) for each level up to n_max.
void bfs_levels(const Seq& x, const DupRule& rule, std::size_t n_max, std::size_t max_states,
                const std::function<void(std::size_t, const std::unordered_set<Seq>&)>& visit)
{
    require_k(rule.k);
    std::unordered_set<Seq> level{x};
    std::size_t len = x.size();
    visit(len, level);
    while (len + rule.k <= n_max && !level.empty()) {
        std::unordered_set<Seq> next;
        for (const auto& w : level) {
            const std::size_t sites = site_count(w.size(), rule);
            for (std::size_t i = 0; i < sites; ++i) {
                next.insert(apply_site(w, rule, i));
                if (next.size() > max_states)
                    throw PartialResult("descendants of length " + std::to_string(len + rule.k) +
                                            " exceed the state cap of " + std::to_string(max_states),
                                        len, level.size());
            }
        }
        level = std::move(next);
        len += rule.k;
        visit(len, level);
    }
}

} // namespace

std::size_t descendant_count(const Seq& x, const DupRule& rule, std::size_t n, std::size_t max_states)
{
    require_k(rule.k);
    if (n < x.size() || (n - x.size()) % rule.k != 0)
        throw InvalidArgument("target length must be |x| plus a multiple of k");
    std::size_t count = 0;
    bfs_levels(x, rule, n, max_states, [&](std::size_t len, const std::unordered_set<Seq>& level) {
        if (len == n)
            count = level.size();
    });
    return count;
}

std::vector<CapacityPoint> capacity_profile(const Seq& x, const DupRule& rule, std::size_t n_max,
                                            std::size_t max_states)
{
    std::vector<CapacityPoint> out;
    bfs_levels(x, rule, n_max, max_states, [&](std::size_t len, const std::unordered_set<Seq>& level) {
        CapacityPoint pt;
        pt.n = len;
        pt.count = level.size();
        pt.rate = len == 0 || level.empty() ? 0.0 : std::log2(double(level.size())) / double(len);
        out.push_back(pt);
    });
    return out;
}

// --- stochastic model ------------------------------------------------------

namespace {

void validate_polya(const PolyaConfig& cfg)
{
    require_k(cfg.rule.k);
    if (cfg.x0.size() < cfg.rule.k)
        throw InvalidArgument("starting word is shorter than k");
    if (cfg.rule.kind == DupKind::reverse_complement && !cfg.x0.alphabet()->has_complement())
        throw InvalidArgument("reverse-complement duplication needs a complement map");
}

} // namespace

Seq polya_simulate(const PolyaConfig& cfg, Rng& rng)
{
    validate_polya(cfg);
    Seq x = cfg.x0;
    for (std::size_t step = 0; step < cfg.steps; ++step)
        x = apply_site(x, cfg.rule, static_cast<std::size_t>(rng.below(site_count(x.size(), cfg.rule))));
    return x;
}

Seq polya_simulate(const PolyaConfig& cfg)
{
    Rng rng(cfg.seed);
    return polya_simulate(cfg, rng);
}

std::map<Seq, Rational> polya_exact_dist(const PolyaConfig& cfg, std::size_t max_states)
{
    validate_polya(cfg);
    std::map<Seq, Rational> dist{{cfg.x0, Rational(1)}};
    for (std::size_t step = 0; step < cfg.steps; ++step) {
        std::map<Seq, Rational> next;
        for (const auto& [w, p] : dist) {
            const std::size_t sites = site_count(w.size(), cfg.rule);
            const Rational share = p / sites;
            for (std::size_t i = 0; i < sites; ++i) {
                next[apply_site(w, cfg.rule, i)] += share;
                if (next.size() > max_states)
                    throw BoundExceeded("exact distribution after " + std::to_string(step + 1) +
                                        " steps exceeds " + std::to_string(max_states) + " outcomes");
            }
        }
        dist = std::move(next);
    }
    return dist;
}

double entropy_bits(const std::map<Seq, Rational>& dist)
{
    double h = 0.0;
    for (const auto& [w, p] : dist) {
        const double v = p.convert_to<double>();
        if (v > 0)
            h -= v * std::log2(v);
    }
    return h;
}

double entropy_estimate(const PolyaConfig& cfg, std::size_t max_states)
{
    if (cfg.steps == 0)
        return 0.0;
    return entropy_bits(polya_exact_dist(cfg, max_states)) / double(cfg.steps);
}

std::map<std::string, double> kmer_frequencies(const Seq& x, std::size_t m)
{
    if (m == 0 || m > x.size())
        throw InvalidArgument("k-mer length must be in [1, |x|]");
    std::map<std::string, std::size_t> counts;
    const std::string s = x.str();
    for (std::size_t i = 0; i + m <= s.size(); ++i)
        ++counts[s.substr(i, m)];
    const double windows = double(s.size() - m + 1);
    std::map<std::string, double> out;
    for (const auto& [kmer, c] : counts)
        out[kmer] = double(c) / windows;
    return out;
}

std::vector<KmerRow> polya_kmer_series(const PolyaConfig& cfg, std::size_t m, std::size_t every)
{
    validate_polya(cfg);
    Rng rng(cfg.seed);
    std::vector<KmerRow> rows;
    auto record = [&](std::size_t step, const Seq& x) {
        if (m > x.size())
            return;
        for (const auto& [kmer, f] : kmer_frequencies(x, m))
            rows.push_back({step, kmer, f});
    };
    Seq x = cfg.x0;
    record(0, x);
    for (std::size_t step = 1; step <= cfg.steps; ++step) {
        x = apply_site(x, cfg.rule, static_cast<std::size_t>(rng.below(site_count(x.size(), cfg.rule))));
        if ((every > 0 && step % every == 0) || step == cfg.steps)
            record(step, x);
    }
    return rows;
}

// --- derivative and roots --------------------------------------------------

DerivativeSeq derivative(const Seq& x, std::size_t k)
{
    require_k(k);
    const std::size_t q = x.q();
    const std::size_t n = x.size();
    std::vector<Symbol> d(n + k);
    for (std::size_t i = 0; i < n + k; ++i) {
        const std::size_t cur = i < n ? x[i] : 0;
        const std::size_t prev = i >= k ? x[i - k] : 0;
        d[i] = static_cast<Symbol>((cur + q - prev) % q);
    }
    return DerivativeSeq{Seq(std::move(d), alphabets::zq(q)), k, q, x.alphabet()};
}

Seq integrate(const DerivativeSeq& dv)
{
    require_k(dv.k);
    const auto& d = dv.d;
    if (d.size() < dv.k)
        throw DecodeError("derivative shorter than k", "corrupt");
    const std::size_t n = d.size() - dv.k;
    const std::size_t q = dv.q;
    std::vector<Symbol> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<Symbol>((d[i] + (i >= dv.k ? x[i - dv.k] : 0)) % q);
    for (std::size_t i = n; i < n + dv.k; ++i) {
        const std::size_t prev = i >= dv.k ? x[i - dv.k] : 0;
        if (d[i] != (q - prev) % q)
            throw DecodeError("derivative tail is inconsistent at position " + std::to_string(i), "corrupt");
    }
    return Seq(std::move(x), dv.alphabet ? dv.alphabet : alphabets::zq(q));
}

std::vector<std::size_t> tandem_dedup_sites(const Seq& x, std::size_t k)
{
    require_k(k);
    std::vector<std::size_t> out;
    const auto& s = x.vec();
    for (std::size_t i = 0; i + 2 * k <= s.size(); ++i)
        if (std::equal(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + k),
                       s.begin() + static_cast<std::ptrdiff_t>(i + k)))
            out.push_back(i);
    return out;
}

Seq tandem_dedup(const Seq& x, std::size_t k, std::size_t s)
{
    require_k(k);
    if (s + 2 * k > x.size())
        throw InvalidArgument("repeat window outside the word");
    const auto& v = x.vec();
    if (!std::equal(v.begin() + static_cast<std::ptrdiff_t>(s), v.begin() + static_cast<std::ptrdiff_t>(s + k),
                    v.begin() + static_cast<std::ptrdiff_t>(s + k)))
        throw InvalidArgument("no tandem repeat at position " + std::to_string(s));
    std::vector<Symbol> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s + k));
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(s + 2 * k), v.end());
    return x.with(std::move(out));
}

bool is_irreducible(const Seq& x, std::size_t k) { return tandem_dedup_sites(x, k).empty(); }

Seq tandem_root_fixed_k(const Seq& x, std::size_t k)
{
    auto dv = derivative(x, k);
    const auto& d = dv.d.vec();
    const std::size_t n = x.size();
    // removable blocks are 0^k windows inside d[k, n); removing them all
    // leaves every interior zero run with its length mod k
    std::vector<Symbol> out;
    out.reserve(d.size());
    std::size_t run = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const bool interior = i >= k && i < n;
        if (interior && d[i] == 0) {
            if (++run == k)
                run = 0;
            continue;
        }
        out.insert(out.end(), run, Symbol{0});
        run = 0;
        out.push_back(d[i]);
    }
    out.insert(out.end(), run, Symbol{0});
    dv.d = Seq(std::move(out), dv.d.alphabet());
    return integrate(dv);
}

namespace {

struct RootMemo {
    std::size_t max_states;
    std::unordered_map<Seq, RootReport> memo;

    const RootReport& solve(const Seq& x)
    {
        if (auto it = memo.find(x); it != memo.end())
            return it->second;
        RootReport rep;
        bool reducible = false;
        const auto& v = x.vec();
        const std::size_t n = v.size();
        for (std::size_t l = 1; 2 * l <= n; ++l)
            for (std::size_t s = 0; s + 2 * l <= n; ++s) {
                if (!std::equal(v.begin() + static_cast<std::ptrdiff_t>(s),
                                v.begin() + static_cast<std::ptrdiff_t>(s + l),
                                v.begin() + static_cast<std::ptrdiff_t>(s + l)))
                    continue;
                std::vector<Symbol> child(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s + l));
                child.insert(child.end(), v.begin() + static_cast<std::ptrdiff_t>(s + 2 * l), v.end());
                const RootReport& sub = solve(x.with(std::move(child)));
                if (!reducible || sub.min_steps + 1 < rep.min_steps)
                    rep.min_steps = sub.min_steps + 1;
                reducible = true;
                rep.roots.insert(sub.roots.begin(), sub.roots.end());
            }
        if (!reducible)
            rep.roots.insert(x);
        if (memo.size() >= max_states)
            throw BoundExceeded("root search exceeds " + std::to_string(max_states) + " states");
        return memo.emplace(x, std::move(rep)).first->second;
    }
};

} // namespace

RootReport roots_unbounded_tandem(const Seq& x, std::size_t max_states)
{
    RootMemo memo{max_states, {}};
    return memo.solve(x);
}

std::vector<std::size_t> distance_to_root_table(std::size_t n_max)
{
    if (n_max > 22)
        throw BoundExceeded("distance-to-root table supports n <= 22");
    // dist[len][word], bit i of word = symbol i
    std::vector<std::vector<std::uint8_t>> dist(n_max + 1);
    std::vector<std::size_t> f(n_max + 1, 0);
    for (std::size_t len = 1; len <= n_max; ++len) {
        auto& cur = dist[len];
        cur.assign(std::size_t{1} << len, 0);
        std::size_t worst = 0;
        for (std::uint32_t w = 0; w < (std::uint32_t{1} << len); ++w) {
            std::size_t best = SIZE_MAX;
            for (std::size_t l = 1; 2 * l <= len && best > 1; ++l) {
                const std::uint32_t mask = (std::uint32_t{1} << l) - 1;
                for (std::size_t s = 0; s + 2 * l <= len; ++s) {
                    if (((w >> s) & mask) != ((w >> (s + l)) & mask))
                        continue;
                    const std::uint32_t low = w & ((std::uint32_t{1} << (s + l)) - 1);
                    const std::uint32_t child = low | ((w >> (s + 2 * l)) << (s + l));
                    best = std::min<std::size_t>(best, dist[len - l][child] + 1u);
                    if (best == 1)
                        break;
                }
            }
            cur[w] = static_cast<std::uint8_t>(best == SIZE_MAX ? 0 : best);
            worst = std::max<std::size_t>(worst, cur[w]);
        }
        f[len] = worst;
    }
    return f;
}

std::size_t max_distance_to_root(std::size_t n)
{
    if (n == 0)
        return 0;
    return distance_to_root_table(n)[n];
}

std::optional<std::size_t> fully_expressive_search(const DupRule& rule, const Seq& x, const Seq& y,
                                                   std::size_t depth_bound, std::size_t max_states)
{
    require_k(rule.k);
    std::unordered_set<Seq> level{x};
    for (std::size_t depth = 0;; ++depth) {
        for (const auto& w : level)
            if (contains(w, y))
                return depth;
        if (depth == depth_bound)
            return std::nullopt;
        std::unordered_set<Seq> next;
        for (const auto& w : level) {
            const std::size_t sites = site_count(w.size(), rule);
            for (std::size_t i = 0; i < sites; ++i) {
                next.insert(apply_site(w, rule, i));
                if (next.size() > max_states)
                    throw BoundExceeded("expressiveness search exceeds " + std::to_string(max_states) +
                                        " states at depth " + std::to_string(depth + 1));
            }
        }
        level = std::move(next);
    }
}

// --- irreducible-word code -------------------------------------------------

namespace {

// completions[pos][r]: ways to finish a word whose prefix of length pos ends
// with r consecutive positions i >= k where x_i = x_{i-k}
std::vector<std::vector<BigUint>> completion_table(std::size_t n, std::size_t q, std::size_t k)
{
    require_k(k);
    if (q < 2)
        throw InvalidArgument("alphabet size must be at least 2");
    std::vector<std::vector<BigUint>> c(n + 1, std::vector<BigUint>(k, 0));
    for (std::size_t r = 0; r < k; ++r)
        c[n][r] = 1;
    for (std::size_t pos = n; pos-- > 0;)
        for (std::size_t r = 0; r < k; ++r) {
            if (pos < k)
                c[pos][r] = c[pos + 1][0] * q;
            else
                c[pos][r] = c[pos + 1][0] * (q - 1) + (r + 1 < k ? c[pos + 1][r + 1] : BigUint(0));
        }
    return c;
}

} // namespace

BigUint irreducible_count(std::size_t n, std::size_t q, std::size_t k)
{
    return completion_table(n, q, k)[0][0];
}

double irreducible_rate(std::size_t n, std::size_t q, std::size_t k)
{
    if (n == 0)
        throw InvalidArgument("rate needs n >= 1");
    const BigUint c = irreducible_count(n, q, k);
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(c));
    const std::size_t shift = top > 52 ? top - 52 : 0;
    const BigUint head = c >> shift;
    return (std::log2(head.convert_to<double>()) + double(shift)) / double(n);
}

std::vector<Seq> irreducible_words(std::size_t n, std::size_t q, std::size_t k, std::size_t max_states)
{
    const BigUint total = irreducible_count(n, q, k);
    if (total > max_states)
        throw BoundExceeded("irreducible codebook has more than " + std::to_string(max_states) + " words");
    std::vector<Seq> out;
    const auto count = total.convert_to<std::size_t>();
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(irreducible_unrank(i, n, q, k));
    return out;
}

std::size_t dup_code_data_bits(std::size_t n, std::size_t q, std::size_t k)
{
    return static_cast<std::size_t>(boost::multiprecision::msb(irreducible_count(n, q, k)));
}

BigUint irreducible_rank(const Seq& word, std::size_t k)
{
    const std::size_t n = word.size(), q = word.q();
    const auto c = completion_table(n, q, k);
    BigUint rank = 0;
    std::size_t r = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        auto next_run = [&](Symbol s) -> std::optional<std::size_t> {
            if (pos < k)
                return 0;
            if (s != word[pos - k])
                return 0;
            if (r + 1 >= k)
                return std::nullopt;
            return r + 1;
        };
        for (Symbol s = 0; s < word[pos]; ++s)
            if (auto nr = next_run(s))
                rank += c[pos + 1][*nr];
        auto nr = next_run(word[pos]);
        if (!nr)
            throw InvalidArgument("word " + word.str() + " contains a length-" + std::to_string(k) +
                                  " tandem repeat");
        r = *nr;
    }
    return rank;
}

Seq irreducible_unrank(BigUint rank, std::size_t n, std::size_t q, std::size_t k)
{
    const auto c = completion_table(n, q, k);
    if (rank >= c[0][0])
        throw InvalidArgument("rank exceeds the number of irreducible words");
    std::vector<Symbol> w(n);
    std::size_t r = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (Symbol s = 0; s < q; ++s) {
            std::size_t nr = 0;
            if (pos >= k && s == w[pos - k]) {
                if (r + 1 >= k)
                    continue;
                nr = r + 1;
            }
            if (rank < c[pos + 1][nr]) {
                w[pos] = s;
                r = nr;
                break;
            }
            rank -= c[pos + 1][nr];
        }
    }
    return Seq(std::move(w), alphabets::zq(q));
}

Seq dup_code_encode(const Seq& data, std::size_t n, std::size_t q, std::size_t k)
{
    if (data.q() != 2)
        throw InvalidArgument("data must be binary");
    const std::size_t bits = dup_code_data_bits(n, q, k);
    if (data.size() != bits)
        throw InvalidArgument("duplication code data must have " + std::to_string(bits) + " bits");
    BigUint rank = 0;
    for (auto b : data.symbols())
        rank = (rank << 1) | BigUint(b);
    return irreducible_unrank(rank, n, q, k);
}

Seq dup_code_decode(const Seq& y, std::size_t q, std::size_t k)
{
    if (y.q() != q)
        throw InvalidArgument("received word is not over an alphabet of size " + std::to_string(q));
    const Seq root = tandem_root_fixed_k(y, k);
    const std::size_t bits = dup_code_data_bits(root.size(), q, k);
    const BigUint rank = irreducible_rank(root, k);
    if ((rank >> bits) != 0)
        throw DecodeError("root " + root.str() + " is not a codeword", "channel_model");
    std::vector<Symbol> out;
    for (std::size_t i = bits; i-- > 0;)
        out.push_back(boost::multiprecision::bit_test(rank, static_cast<unsigned>(i)) ? 1 : 0);
    return Seq(std::move(out), alphabets::binary());
}

} // namespace dnacode::dup
