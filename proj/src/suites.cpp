#include "twosq/suites.hpp"

#include "twosq/triple_product.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace twosq::suites {

namespace {

SuiteReport named(std::string name)
{
    SuiteReport r;
    r.name = std::move(name);
    return r;
}

void fail(SuiteReport& r, const std::string& what)
{
    if (r.ok) r.counterexample = what;
    r.ok = false;
}

// ---- partitions ----------------------------------------------------------

void all_partitions_rec(int max_part, int remaining, std::vector<int>& cur, std::vector<Partition>& out)
{
    out.push_back(Partition::from_parts(cur));
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        all_partitions_rec(p, remaining - p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int max_sum)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    all_partitions_rec(max_sum, max_sum, cur, out);
    return out;
}

using PairOp = std::function<std::optional<PartitionPair>(const Partition&, const Partition&)>;
using PairPred = std::function<bool(const Partition&, const Partition&)>;

SuiteReport pair_op_suite(const std::string& name, const std::vector<Partition>& parts, int max_sum, const PairOp& op,
                          const PairPred& admissible, const PairPred& residual)
{
    SuiteReport r = named(name);
    for (const auto& l : parts)
        for (const auto& m : parts) {
            if (l.sum() + m.sum() > max_sum || !admissible(l, m)) continue;
            ++r.checked;
            const std::string at = "(" + l.to_string() + " | " + m.to_string() + ")";
            const auto out = op(l, m);
            if (!out) {
                ++r.residuals;
                if (!residual(l, m)) fail(r, "undefined off the residual set at " + at);
                continue;
            }
            ++r.matched;
            if (residual(l, m)) fail(r, "defined on the residual set at " + at);
            const auto& [l2, m2] = *out;
            if (!admissible(l2, m2)) fail(r, "output breaks the slot constraints at " + at);
            if (l2.sum() + m2.sum() != l.sum() + m.sum()) fail(r, "sum not conserved at " + at);
            if (std::abs(l2.order() - l.order()) != 1 || std::abs(m2.order() - m.order()) != 1)
                fail(r, "not exactly one part moved at " + at);
            const auto back = op(l2, m2);
            if (!back || back->first != l || back->second != m) fail(r, "not an involution at " + at);
        }
    return r;
}

// ---- generic matching checks ---------------------------------------------

template <typename V>
void check_pair(SuiteReport& r, const V& v, const V& p, const V& pp, bool full_weight)
{
    const Weight a = weight(v), b = weight(p);
    const bool cancels = full_weight ? a.cancels(b) : (a.sign == -b.sign && a.q_half == b.q_half);
    if (!cancels) fail(r, "weights do not cancel: " + v.to_string() + " -> " + p.to_string());
    if (pp != v) fail(r, "not an involution: " + v.to_string() + " -> " + p.to_string() + " -> " + pp.to_string());
}

template <typename V, typename F>
SuiteReport perfect_suite(const std::string& name, const std::function<void(const std::function<void(const V&)>&)>& each,
                          const F& match)
{
    SuiteReport r = named(name);
    each([&](const V& v) {
        ++r.checked;
        try {
            const V p = match(v);
            const V pp = match(p);
            ++r.matched;
            check_pair(r, v, p, pp, std::is_same_v<V, GVertex>);
        } catch (const std::exception& e) {
            fail(r, std::string("exception at ") + v.to_string() + ": " + e.what());
        }
    });
    return r;
}

int isqrt(long long n)
{
    int r = 0;
    while (1LL * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<SquarePair> square_pairs_brute(long long n)
{
    std::vector<SquarePair> out;
    const int r = isqrt(n);
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            if (1LL * a * a + 1LL * b * b == n) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FactorWitness> witnesses_brute(long long n)
{
    std::vector<FactorWitness> out;
    for (int d = 1; d <= n; d += 2)
        if (n % d == 0)
            for (int e1 = 0; e1 < 2; ++e1)
                for (int e2 = 0; e2 < 2; ++e2) out.push_back({d, static_cast<int>(n / d), e1, e2});
    std::sort(out.begin(), out.end());
    return out;
}

// ---- triple product ------------------------------------------------------

void odd_sets_rec(int next, int remaining, std::vector<int>& cur, std::vector<OddSet>& out)
{
    out.emplace_back(cur);
    for (int x = next; x <= remaining; x += 2) {
        cur.push_back(x);
        odd_sets_rec(x + 2, remaining - x, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SuiteReport> partition_suites(int max_sum)
{
    const auto parts = all_partitions(max_sum);
    auto distinct_any = [](const Partition& l, const Partition&) { return l.is_distinct(); };
    auto both_empty = [](const Partition& l, const Partition& m) { return l.empty() && m.empty(); };
    std::vector<SuiteReport> out;
    out.push_back(pair_op_suite("reciprocal", parts, max_sum, reciprocal_pair, distinct_any, both_empty));
    for (int skip = 1; skip <= max_sum; ++skip) {
        auto op = [skip](const Partition& l, const Partition& m) { return reciprocal_pair_skip(l, m, skip); };
        auto residual = [skip](const Partition& l, const Partition& m) {
            for (const Partition* p : {&l, &m})
                for (const auto& e : p->entries())
                    if (e.value != skip) return false;
            return true;
        };
        auto r = pair_op_suite("reciprocal-skip", parts, max_sum, op, distinct_any, residual);
        if (out.back().name == "reciprocal-skip") {
            auto& acc = out.back();
            acc.checked += r.checked;
            acc.matched += r.matched;
            acc.residuals += r.residuals;
            if (!r.ok && acc.ok) {
                acc.ok = false;
                acc.counterexample = "skip " + std::to_string(skip) + ": " + r.counterexample;
            }
        } else {
            if (!r.ok) r.counterexample = "skip " + std::to_string(skip) + ": " + r.counterexample;
            out.push_back(r);
        }
    }
    out.push_back(pair_op_suite(
        "sq-diff-den", parts, max_sum, sq_diff_den, [](const Partition&, const Partition&) { return true; },
        [](const Partition& l, const Partition& m) { return l.empty() && m.all_mults_even(); }));
    out.push_back(pair_op_suite(
        "sq-diff-num", parts, max_sum, sq_diff_num,
        [](const Partition& l, const Partition& m) { return l.is_distinct() && m.is_distinct(); },
        [](const Partition& l, const Partition& m) { return l == m; }));
    out.push_back(pair_op_suite(
        "euler-identity", parts, max_sum, euler_identity_pair,
        [](const Partition& l, const Partition& m) { return l.is_distinct() && m.all_even(); },
        [](const Partition& l, const Partition& m) { return l.all_odd() && m.empty(); }));
    return out;
}

SuiteReport j_suite_g(int max_q_half, const Matchings& m)
{
    return perfect_suite<GVertex>(
        "J on G", [&](const auto& fn) { oracles::for_each_g(std::nullopt, max_q_half, fn); }, m.j_g);
}

SuiteReport j_suite_marked(int max_q_half, const Matchings& m)
{
    return perfect_suite<MarkedVertex>(
        "J on G'", [&](const auto& fn) { oracles::for_each_marked(std::nullopt, max_q_half, fn); }, m.j_marked);
}

SuiteReport j_suite_full(int max_q_half, const Matchings& m)
{
    return perfect_suite<FullVertex>(
        "J on G''", [&](const auto& fn) { oracles::for_each_full(std::nullopt, max_q_half, fn); }, m.j_full);
}

SuiteReport h_suite(int max_q_half, const Matchings& m)
{
    SuiteReport r = named("H");
    oracles::for_each_full(0, max_q_half, [&](const FullVertex& v) {
        ++r.checked;
        try {
            const auto p = m.h(v);
            if (!p) {
                ++r.residuals;
                if (!in_t_domain(v)) fail(r, "unmatched off the (1,-) set: " + v.to_string());
                return;
            }
            ++r.matched;
            if (in_t_domain(v)) fail(r, "matched on the (1,-) set: " + v.to_string());
            if (p->cls() != 0 || in_t_domain(*p)) fail(r, "partner leaves the domain: " + p->to_string());
            const auto pp = m.h(*p);
            check_pair(r, v, *p, pp ? *pp : *p, false);
        } catch (const std::exception& e) {
            fail(r, std::string("exception at ") + v.to_string() + ": " + e.what());
        }
    });
    return r;
}

SuiteReport t_suite(int max_q_half, const Matchings& m)
{
    SuiteReport r = named("T");
    std::map<long long, std::vector<SquarePair>> found;
    oracles::for_each_full(
        0, max_q_half,
        [&](const FullVertex& v) {
            ++r.checked;
            try {
                auto res = m.t(v);
                if (auto* sp = std::get_if<SquarePair>(&res)) {
                    ++r.residuals;
                    const Weight w = weight(v);
                    if (w.q_half != 2 * sp->norm())
                        fail(r, "residual exponent differs from m1^2+m2^2: " + v.to_string());
                    if (w.sign != ((sp->m1 + sp->m2) % 2 == 0 ? 1 : -1))
                        fail(r, "residual sign differs from (-1)^(m1+m2): " + v.to_string());
                    found[w.q_half].push_back(*sp);
                    return;
                }
                ++r.matched;
                const FullVertex p = std::get<FullVertex>(std::move(res));
                if (!in_t_domain(p)) fail(r, "partner leaves the domain: " + p.to_string());
                auto back = m.t(p);
                const auto* pp = std::get_if<FullVertex>(&back);
                check_pair(r, v, p, pp ? *pp : p, false);
            } catch (const std::exception& e) {
                fail(r, std::string("exception at ") + v.to_string() + ": " + e.what());
            }
        },
        [](const MarkedVertex& b) { return in_t_domain(b); });

    for (long long q = 0; q <= max_q_half; ++q) {
        auto got = found.count(q) ? found[q] : std::vector<SquarePair>{};
        std::sort(got.begin(), got.end());
        const auto want = q % 2 == 0 ? square_pairs_brute(q / 2) : std::vector<SquarePair>{};
        if (got != want || static_cast<long long>(want.size()) != (q % 2 ? 0 : oracles::r2_brute(q / 2)))
            fail(r, "residuals at n = " + std::to_string(q / 2) + " are not the square pairs (" +
                        std::to_string(got.size()) + " found)");
    }
    return r;
}

SuiteReport o_suite(int max_q_half, const Matchings& m)
{
    SuiteReport r = named("O");
    std::map<long long, std::vector<FactorWitness>> found;
    long long constant_term = 0;
    auto each = [&](const FullVertex& v) {
        ++r.checked;
        try {
            auto res = m.o(v);
            if (auto* w = std::get_if<FactorWitness>(&res)) {
                ++r.residuals;
                const long long q = weight(v).q_half;
                if (q != 2 * w->n()) fail(r, "residual exponent differs from d*N: " + v.to_string());
                found[q].push_back(*w);
                return;
            }
            ++r.matched;
            const FullVertex p = std::get<FullVertex>(std::move(res));
            if (p.cls() != 1 && p.cls() != 2) fail(r, "partner leaves the domain: " + p.to_string());
            auto back = m.o(p);
            const auto* pp = std::get_if<FullVertex>(&back);
            check_pair(r, v, p, pp ? *pp : p, false);
        } catch (const ConstantTermResidual&) {
            ++r.residuals;
            ++constant_term;
            if (weight(v).q_half != 0) fail(r, "0-mark residual away from the constant term: " + v.to_string());
        } catch (const std::exception& e) {
            fail(r, std::string("exception at ") + v.to_string() + ": " + e.what());
        }
    };
    oracles::for_each_full(1, max_q_half, each);
    oracles::for_each_full(2, max_q_half, each);

    if (constant_term != 1) fail(r, std::to_string(constant_term) + " constant-term residuals, expected 1");
    for (long long q = 1; q <= max_q_half; ++q) {
        auto got = found.count(q) ? found[q] : std::vector<FactorWitness>{};
        std::sort(got.begin(), got.end());
        const auto want = q % 2 == 0 ? witnesses_brute(q / 2) : std::vector<FactorWitness>{};
        bool counts_ok = true;
        if (q % 2 == 0) {
            const auto div = oracles::divisor_counts(q / 2);
            counts_ok = static_cast<long long>(got.size()) == 4LL * (div.d1 + div.d3);
        }
        if (got != want || !counts_ok)
            fail(r, "residuals at n = " + std::to_string(q / 2) + " are not the odd-divisor witnesses (" +
                        std::to_string(got.size()) + " found)");
    }
    return r;
}

std::vector<SuiteReport> lemma_suites(int max_q_half, const Matchings& m)
{
    return {j_suite_g(max_q_half, m), j_suite_marked(max_q_half, m), j_suite_full(max_q_half, m),
            h_suite(max_q_half, m),   t_suite(max_q_half, m),        o_suite(max_q_half, m)};
}

std::vector<SuiteReport> triple_product_suites(int max_sum)
{
    std::vector<OddSet> sets;
    std::vector<int> cur;
    odd_sets_rec(1, max_sum, cur, sets);

    SuiteReport round = named("round trip"), conserve = named("weight conservation"),
                counts = named("coefficient counts");
    std::map<std::pair<long long, int>, long long> tally;
    for (const auto& a : sets)
        for (const auto& b : sets) {
            const long long t = a.sum() + b.sum();
            if (t > max_sum) continue;
            const std::string at = "(" + a.to_string() + ", " + b.to_string() + ")";
            ++round.checked;
            ++conserve.checked;
            try {
                const auto img = triple_product::forward(a, b);
                ++tally[{t, img.n}];
                if (img.n != a.size() - b.size() || !img.lambda.all_even() ||
                    1LL * img.n * img.n + img.lambda.sum() != t)
                    fail(conserve, "bad image at " + at);
                const auto [a2, b2] = triple_product::reverse(img.n, img.lambda);
                if (a2 != a || b2 != b) fail(round, "round trip fails at " + at);
            } catch (const std::exception& e) {
                fail(round, "exception at " + at + ": " + e.what());
            }
        }
    for (long long t = 0; t <= max_sum; ++t)
        for (int n = -isqrt(t); n <= isqrt(t); ++n) {
            ++counts.checked;
            const long long rest = t - 1LL * n * n;
            const long long want = rest % 2 == 0 ? oracles::partition_count(static_cast<int>(rest / 2)) : 0;
            const long long got = tally.count({t, n}) ? tally[{t, n}] : 0;
            if (got != want)
                fail(counts, "t=" + std::to_string(t) + " n=" + std::to_string(n) + ": " + std::to_string(got) +
                                 " pairs, " + std::to_string(want) + " even partitions");
        }
    return {round, conserve, counts};
}

std::vector<VerifyRow> verify_range(int max_n, const WalkOptions& opts,
                                    const std::function<void(const VerifyRow&)>& progress)
{
    if (max_n < 1) throw std::invalid_argument("verify needs max n >= 1");
    std::vector<VerifyRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        VerifyRow row;
        row.n = n;
        row.r2 = oracles::r2_brute(n);
        row.divisors = oracles::divisor_counts(n);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto table = jacobi_table(n, opts);
            row.walks = static_cast<int>(table.size());
            for (const auto& w : table) {
                row.edge_pairs_total += w.edge_pairs;
                row.edge_pairs_max = std::max(row.edge_pairs_max, w.edge_pairs);
                if (std::holds_alternative<SquarePair>(w.endpoint))
                    ++row.square_endpoints;
                else
                    ++row.witness_endpoints;
            }
            row.ok = row.walks == 4 * row.divisors.d1 && row.square_endpoints == row.r2 &&
                     row.witness_endpoints == 4 * row.divisors.d3 &&
                     row.r2 == 4LL * (row.divisors.d1 - row.divisors.d3);
            if (!row.ok) row.error = "endpoint counts disagree with the oracles";
        } catch (const WalkTimeout& e) {
            row.timed_out = true;
            row.error = e.what();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(row);
        if (progress) progress(row);
        if (row.timed_out) break;
    }
    return rows;
}

} // namespace twosq::suites
