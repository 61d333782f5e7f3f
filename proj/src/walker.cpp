#include "twosq/walker.hpp"

#include "twosq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace twosq {

FullVertex encode_start(const FactorWitness& w)
{
    if (w.d % 4 != 1) throw std::invalid_argument("walks start from witnesses with d = 1 mod 4");
    return encode_witness(w);
}

namespace {

void check_edge(const FullVertex& from, const FullVertex& to, Matching m)
{
    const Weight a = weight(from), b = weight(to);
    if (!a.cancels(b))
        throw WalkError(std::string("weight not reversed across ") + static_cast<char>(m) + " edge: " +
                        from.to_string() + " [" + a.to_string() + "] -> " + to.to_string() + " [" + b.to_string() +
                        "]");
}

} // namespace

WalkResult walk(const FactorWitness& w, const WalkOptions& opts)
{
    WalkResult result;
    result.start = w;
    FullVertex v = encode_start(w);
    const long long q_half = weight(v).q_half;
    if (q_half != 2 * w.n()) throw WalkError("start vertex has the wrong exponent: " + v.to_string());

    std::unordered_set<std::string> seen;
    std::uint64_t step = 0;
    auto visit = [&](const FullVertex& x, Matching m) {
        ++step;
        if (opts.observer) opts.observer(step, m, x);
        if (opts.record_trace) result.trace.push_back({m, x.to_string()});
        if (opts.cycle_check == CycleCheck::visited_set && !seen.insert(x.to_string()).second)
            throw WalkError("vertex repeated on path: " + x.to_string());
    };
    if (opts.cycle_check == CycleCheck::visited_set) seen.insert(v.to_string());
    FullVertex checkpoint = v;
    std::uint64_t next_checkpoint = 1;

    for (;;) {
        FullVertex u = j_match(v);
        if (opts.check_weights) check_edge(v, u, Matching::J);
        visit(u, Matching::J);

        Matching m;
        std::optional<FullVertex> next;
        if (u.cls() == 0) {
            if (in_t_domain(u)) {
                m = Matching::T;
                auto r = t_match(u);
                if (auto* sp = std::get_if<SquarePair>(&r)) {
                    result.endpoint = *sp;
                    break;
                }
                next = std::get<FullVertex>(std::move(r));
            } else {
                m = Matching::H;
                next = h_match(u);
            }
        } else {
            m = Matching::O;
            auto r = o_match(u);
            if (auto* fw = std::get_if<FactorWitness>(&r)) {
                result.endpoint = *fw;
                break;
            }
            next = std::get<FullVertex>(std::move(r));
        }
        if (opts.check_weights) check_edge(u, *next, m);
        visit(*next, m);
        if (opts.record_word) result.word.push_back(static_cast<char>(m));
        ++(m == Matching::H ? result.h_count : m == Matching::T ? result.t_count : result.o_count);
        if (++result.edge_pairs > opts.max_edge_pairs)
            throw WalkError("walk from " + w.to_string() + " exceeded the edge-pair limit");
        v = std::move(*next);
        if (opts.cycle_check == CycleCheck::brent) {
            if (v == checkpoint) throw WalkError("vertex repeated on path: " + v.to_string());
            if (result.edge_pairs == next_checkpoint) {
                checkpoint = v;
                next_checkpoint *= 2;
            }
        }
        if (opts.deadline && (result.edge_pairs & 0xfff) == 1 && std::chrono::steady_clock::now() > *opts.deadline)
            throw WalkTimeout("walk from " + w.to_string() + " passed the deadline after " +
                              std::to_string(result.edge_pairs) + " edge pairs");
    }

    const long long end_n = std::visit(
        [](const auto& e) -> long long {
            if constexpr (std::is_same_v<std::decay_t<decltype(e)>, SquarePair>)
                return e.norm();
            else
                return e.n();
        },
        result.endpoint);
    if (end_n != w.n()) throw WalkError("endpoint exponent differs from start: " + to_string(result.endpoint));
    return result;
}

std::vector<FactorWitness> factors_1mod4(int n)
{
    std::vector<FactorWitness> out;
    for (int d = n; d >= 1; --d) {
        if (n % d != 0 || d % 4 != 1) continue;
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2) out.push_back({d, n / d, e1, e2});
    }
    return out;
}

std::vector<FactorWitness> factors_3mod4(int n)
{
    std::vector<FactorWitness> out;
    for (int d = n; d >= 1; --d) {
        if (n % d != 0 || d % 4 != 3) continue;
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2) out.push_back({d, n / d, e1, e2});
    }
    return out;
}

std::vector<SquarePair> square_pairs(int n)
{
    std::vector<SquarePair> out;
    const int r = static_cast<int>(std::sqrt(static_cast<double>(n))) + 1;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            if (a * a + b * b == n) out.push_back({a, b});
    return out;
}

std::vector<WalkResult> jacobi_table(int n, const WalkOptions& opts)
{
    if (n < 1) throw std::invalid_argument("jacobi_table expects n >= 1");
    std::vector<WalkResult> rows;
    for (const auto& w : factors_1mod4(n)) rows.push_back(walk(w, opts));
    if (auto err = endpoint_mismatch(n, rows); !err.empty()) throw WalkError(err);
    return rows;
}

std::string endpoint_mismatch(int n, const std::vector<WalkResult>& rows)
{
    std::vector<Endpoint> expected;
    for (const auto& p : square_pairs(n)) expected.emplace_back(p);
    for (const auto& f : factors_3mod4(n)) expected.emplace_back(f);
    std::vector<Endpoint> got;
    for (const auto& r : rows) got.push_back(r.endpoint);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got == expected) return {};
    std::string msg = "endpoints of n=" + std::to_string(n) + " are not SquarePairs u Factors3mod4:";
    for (const auto& r : rows) msg += " " + r.start.to_string() + "->" + to_string(r.endpoint);
    return msg;
}

std::string word_summary(const std::string& word, std::size_t max_letters)
{
    std::string out;
    if (word.size() <= max_letters) {
        for (char c : word) {
            if (!out.empty()) out += ',';
            out += c;
        }
        return out;
    }
    std::map<char, std::size_t> counts;
    for (char c : word) ++counts[c];
    for (char c : {'H', 'T', 'O'}) {
        if (!out.empty()) out += ';';
        out += std::string(1, c) + "=" + std::to_string(counts[c]);
    }
    return out;
}

} // namespace twosq
