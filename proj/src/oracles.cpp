#include "twosq/oracles.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace twosq::oracles {

long long r2_brute(long long n)
{
    if (n < 0) throw std::invalid_argument("r2 of a negative number");
    long long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    long long count = 0;
    for (long long m1 = -r; m1 <= r; ++m1)
        for (long long m2 = -r; m2 <= r; ++m2)
            if (m1 * m1 + m2 * m2 == n) ++count;
    return count;
}

DivisorProfile divisor_counts(long long n)
{
    if (n < 1) throw std::invalid_argument("divisor counts need n >= 1");
    DivisorProfile p{n, 0, 0};
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 4 == 1) ++p.d1;
        if (d % 4 == 3) ++p.d3;
    }
    return p;
}

long long partition_count(int m)
{
    if (m < 0) return 0;
    std::vector<long long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int s = part; s <= m; ++s) p[s] += p[s - part];
    return p[m];
}

namespace {

// Per-element cost (contribution to q_half) of A, B and D in each class.
struct Costs {
    int a_mul, a_add, b_mul, b_add, d_mul;
};

Costs costs_of(int cls)
{
    switch (cls) {
    case 0: return {1, 1, 1, -1, 1};
    case 1: return {4, 2, 4, -2, 4};
    case 2: return {4, -2, 4, 2, 4};
    default: throw std::invalid_argument("class must be 0, 1 or 2");
    }
}

struct CostedSet {
    std::vector<int> elems;
    int cost;
};

// Sets of distinct integers first, first+2, ... whose total cost
// mul*x+add stays within budget.
void sets_rec(int next, int mul, int add, int budget, std::vector<int>& cur, int cost, std::vector<CostedSet>& out)
{
    out.push_back({cur, cost});
    for (int x = next;; x += 2) {
        const int c = mul * x + add;
        if (cost + c > budget) break;
        cur.push_back(x);
        sets_rec(x + 2, mul, add, budget, cur, cost + c, out);
        cur.pop_back();
    }
}

std::vector<CostedSet> costed_sets(int first, int mul, int add, int budget)
{
    std::vector<CostedSet> out;
    std::vector<int> cur;
    if (budget >= 0) sets_rec(first, mul, add, budget, cur, 0, out);
    return out;
}

std::vector<int> classes(ClassFilter cls)
{
    if (cls) return {*cls};
    return {0, 1, 2};
}

std::vector<Mark> marks_of(const GVertex& v)
{
    std::vector<Mark> out;
    const bool doubled = v.cls != 0;
    if (v.cls == 2) out.push_back(Mark::zero());
    for (int a : v.a) {
        out.push_back(Mark::plus(a));
        if (doubled) out.push_back(Mark::plus(a + 1));
    }
    for (int b : v.b) {
        out.push_back(Mark::minus(b));
        if (doubled) out.push_back(Mark::minus(b + 1));
    }
    return out;
}

enum class SlotKind { any, distinct, three_mod_four, one_mod_four, even };

SlotKind kind_of(Slot s)
{
    switch (s) {
    case Slot::nu1: case Slot::nu2: case Slot::pi1: case Slot::pi2: case Slot::pi3: case Slot::pi4:
        return SlotKind::distinct;
    case Slot::xi1: return SlotKind::three_mod_four;
    case Slot::xi2: return SlotKind::one_mod_four;
    case Slot::xi3: return SlotKind::even;
    default: return SlotKind::any;
    }
}

bool part_allowed(SlotKind k, int p)
{
    switch (k) {
    case SlotKind::three_mod_four: return p % 4 == 3;
    case SlotKind::one_mod_four: return p % 4 == 1;
    case SlotKind::even: return p % 2 == 0;
    default: return true;
    }
}

struct SizedPartition {
    Partition p;
    int sum;
};

// Partitions with parts <= max_part drawn from the slot's allowed parts,
// built largest part first.
void parts_rec(SlotKind k, int max_part, int remaining, std::vector<int>& cur, int sum,
               std::vector<SizedPartition>& out)
{
    out.push_back({Partition::from_parts(cur), sum});
    const int top = std::min(max_part, remaining);
    for (int p = top; p >= 1; --p) {
        if (!part_allowed(k, p)) continue;
        cur.push_back(p);
        parts_rec(k, k == SlotKind::distinct ? p - 1 : p, remaining - p, cur, sum + p, out);
        cur.pop_back();
    }
}

std::vector<SizedPartition> slot_partitions(SlotKind k, int max_sum)
{
    std::vector<SizedPartition> out;
    std::vector<int> cur;
    parts_rec(k, max_sum, max_sum, cur, 0, out);
    return out;
}

class GammaEnumerator {
public:
    explicit GammaEnumerator(int max_sum)
    {
        for (SlotKind k : {SlotKind::any, SlotKind::distinct, SlotKind::three_mod_four, SlotKind::one_mod_four,
                           SlotKind::even})
            lists_[static_cast<std::size_t>(k)] = slot_partitions(k, std::max(max_sum, 0));
    }

    void run(int budget, const std::function<void(const GammaTuple&)>& fn)
    {
        if (budget < 0) return;
        GammaTuple g;
        rec(0, budget, g, fn);
    }

private:
    void rec(std::size_t slot, int budget, GammaTuple& g, const std::function<void(const GammaTuple&)>& fn)
    {
        if (slot == kSlotCount) {
            fn(g);
            return;
        }
        const auto& list = lists_[static_cast<std::size_t>(kind_of(static_cast<Slot>(slot)))];
        for (const auto& sp : list) {
            if (sp.sum > budget) continue;
            g.slots[slot] = sp.p;
            rec(slot + 1, budget - sp.sum, g, fn);
        }
        g.slots[slot] = Partition{};
    }

    std::array<std::vector<SizedPartition>, 5> lists_;
};

using Poly = std::vector<long long>;

Poly mul(const Poly& x, const Poly& y)
{
    Poly out(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += x[i] * y[j];
    }
    return out;
}

// Polynomials with a nilpotent marker e (e^2 = 0): the e-part counts
// (vertex, marked element) pairs.
struct Dual {
    Poly re, eps;
};

Dual mul(const Dual& x, const Dual& y)
{
    Poly e1 = mul(x.re, y.eps), e2 = mul(x.eps, y.re);
    for (std::size_t i = 0; i < e1.size(); ++i) e1[i] += e2[i];
    return {mul(x.re, y.re), e1};
}

// prod over elements x of (1 + q^cost(x) (1 + marks_per_element * e)).
Dual element_product(int first, int mul_, int add, int marks_per_element, int max)
{
    Dual out{Poly(max + 1, 0), Poly(max + 1, 0)};
    out.re[0] = 1;
    for (int x = first;; x += 2) {
        const int c = mul_ * x + add;
        if (c > max) break;
        Dual f{Poly(max + 1, 0), Poly(max + 1, 0)};
        f.re[0] = 1;
        f.re[c] += 1;
        f.eps[c] += marks_per_element;
        out = mul(out, f);
    }
    return out;
}

Poly base_series(Level level, int cls, int max)
{
    const Costs c = costs_of(cls);
    const int per = cls == 0 ? 1 : 2;
    Dual s = mul(mul(element_product(1, c.a_mul, c.a_add, per, max), element_product(1, c.b_mul, c.b_add, per, max)),
                 element_product(2, c.d_mul, 0, 0, max));
    if (level == Level::G) return s.re;
    Poly out = s.eps;
    if (cls == 2)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += s.re[i];
    return out;
}

} // namespace

void for_each_g(ClassFilter cls, int max_q_half, const std::function<void(const GVertex&)>& fn)
{
    for (int k : classes(cls)) {
        const Costs c = costs_of(k);
        const auto as = costed_sets(1, c.a_mul, c.a_add, max_q_half);
        const auto bs = costed_sets(1, c.b_mul, c.b_add, max_q_half);
        const auto ds = costed_sets(2, c.d_mul, 0, max_q_half);
        for (const auto& a : as)
            for (const auto& b : bs) {
                if (a.cost + b.cost > max_q_half) continue;
                for (const auto& d : ds) {
                    if (a.cost + b.cost + d.cost > max_q_half) continue;
                    fn(GVertex{OddSet(a.elems), OddSet(b.elems), EvenSet(d.elems), k});
                }
            }
    }
}

void for_each_marked(ClassFilter cls, int max_q_half, const std::function<void(const MarkedVertex&)>& fn)
{
    for_each_g(cls, max_q_half, [&](const GVertex& v) {
        for (const Mark& m : marks_of(v)) fn(MarkedVertex{v, m});
    });
}

void for_each_full(ClassFilter cls, int max_q_half, const std::function<void(const FullVertex&)>& fn,
                   const std::function<bool(const MarkedVertex&)>& keep_base)
{
    GammaEnumerator gammas(max_q_half / 2);
    for_each_marked(cls, max_q_half, [&](const MarkedVertex& mv) {
        if (keep_base && !keep_base(mv)) return;
        const long long q0 = weight(mv).q_half;
        FullVertex v{mv, {}};
        gammas.run(static_cast<int>((max_q_half - q0) / 2), [&](const GammaTuple& g) {
            v.gamma = g;
            fn(v);
        });
    });
}

std::vector<GVertex> enumerate_g(ClassFilter cls, int max_q_half)
{
    std::vector<GVertex> out;
    for_each_g(cls, max_q_half, [&](const GVertex& v) { out.push_back(v); });
    return out;
}

std::vector<MarkedVertex> enumerate_marked(ClassFilter cls, int max_q_half)
{
    std::vector<MarkedVertex> out;
    for_each_marked(cls, max_q_half, [&](const MarkedVertex& v) { out.push_back(v); });
    return out;
}

std::vector<FullVertex> enumerate_full(ClassFilter cls, int max_q_half)
{
    std::vector<FullVertex> out;
    for_each_full(cls, max_q_half, [&](const FullVertex& v) { out.push_back(v); });
    return out;
}

std::vector<long long> slice_counts(Level level, ClassFilter cls, int max_q_half)
{
    std::vector<long long> out(static_cast<std::size_t>(max_q_half) + 1, 0);
    auto bump = [&](long long q) {
        if (q < 0 || q > max_q_half) throw std::logic_error("enumerated vertex outside the slice");
        ++out[static_cast<std::size_t>(q)];
    };
    switch (level) {
    case Level::G: for_each_g(cls, max_q_half, [&](const GVertex& v) { bump(weight(v).q_half); }); break;
    case Level::Gprime:
        for_each_marked(cls, max_q_half, [&](const MarkedVertex& v) { bump(weight(v).q_half); });
        break;
    case Level::Gpp: for_each_full(cls, max_q_half, [&](const FullVertex& v) { bump(weight(v).q_half); }); break;
    }
    return out;
}

std::vector<long long> gamma_series(int max_sum)
{
    Poly out(static_cast<std::size_t>(max_sum) + 1, 0);
    out[0] = 1;
    for (std::size_t s = 0; s < kSlotCount; ++s) {
        const SlotKind k = kind_of(static_cast<Slot>(s));
        for (int p = 1; p <= max_sum; ++p) {
            if (!part_allowed(k, p)) continue;
            if (k == SlotKind::distinct) {
                for (int i = max_sum; i >= p; --i) out[i] += out[i - p];
            } else {
                for (int i = p; i <= max_sum; ++i) out[i] += out[i - p];
            }
        }
    }
    return out;
}

std::vector<long long> series_counts(Level level, ClassFilter cls, int max_q_half)
{
    Poly total(static_cast<std::size_t>(max_q_half) + 1, 0);
    for (int k : classes(cls)) {
        Poly s = base_series(level == Level::G ? Level::G : Level::Gprime, k, max_q_half);
        if (level == Level::Gpp) {
            // Gamma parts add twice their size to q_half.
            const auto g = gamma_series(max_q_half / 2);
            Poly spread(total.size(), 0);
            for (std::size_t i = 0; i < g.size(); ++i) spread[2 * i] = g[i];
            s = mul(s, spread);
        }
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += s[i];
    }
    return total;
}

} // namespace twosq::oracles
