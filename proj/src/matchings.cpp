#include "twosq/matchings.hpp"

#include "twosq/graph.hpp"

#include <stdexcept>
#include <vector>

namespace twosq {

std::string SquarePair::to_string() const
{
    return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
}

MarkSign FactorWitness::mark_sign() const
{
    const bool one_mod_four = d % 4 == 1;
    const bool class_two = eps1 == 1;
    return one_mod_four == class_two ? MarkSign::plus : MarkSign::minus;
}

int FactorWitness::mark_index() const
{
    const int element = d % 4 == 1 ? (d + 1) / 2 : (d - 1) / 2;
    return element + eps2;
}

std::string FactorWitness::to_string() const
{
    return "(" + std::to_string(d) + "," + std::to_string(big_n) + ";" + std::to_string(cls()) + "," +
           std::to_string(mark_index()) + "," + (mark_sign() == MarkSign::plus ? "+" : "-") + ")";
}

std::string to_string(const Endpoint& e)
{
    return std::visit([](const auto& x) { return x.to_string(); }, e);
}

namespace {

constexpr std::array<Slot, 4> kRho = {Slot::rho1, Slot::rho2, Slot::rho3, Slot::rho4};
constexpr std::array<Slot, 4> kPi = {Slot::pi1, Slot::pi2, Slot::pi3, Slot::pi4};

// Partition whose parts are `scale * x` for x in the set (or the parts
// scaled by 1/scale when `scale` is negative).
template <int R>
Partition scaled(const ParitySet<R>& s, int mul, int add, int div = 1)
{
    Partition out;
    for (int x : s) out.add((mul * x + add) / div);
    return out;
}

template <typename Set>
Set unscaled(const Partition& p, int mul, int add, int div = 1)
{
    std::vector<int> elems;
    for (const auto& e : p.entries()) {
        if (e.mult != 1) throw std::logic_error("expected distinct parts");
        elems.push_back((e.value * div - add) / mul);
    }
    return Set(std::move(elems));
}

// mu with even multiplicities re-read as a partition of even parts:
// part i with multiplicity 2c becomes part 2i with multiplicity c.
Partition halve_mults(const Partition& mu)
{
    Partition out;
    for (const auto& e : mu.entries()) out.add(2 * e.value, e.mult / 2);
    return out;
}

Partition double_mults(const Partition& sigma)
{
    Partition out;
    for (const auto& e : sigma.entries()) out.add(e.value / 2, 2 * e.mult);
    return out;
}

Partition t_mu(const GammaTuple& g, int k)
{
    switch (k) {
    case 0: return g[Slot::mu1];
    case 1: return g[Slot::mu2];
    case 2: {
        Partition out = g[Slot::xi1];
        for (Slot s : {Slot::xi2, Slot::xi3})
            for (const auto& e : g[s].entries()) out.add(e.value, e.mult);
        return out;
    }
    default: return g[Slot::xi4];
    }
}

void store_t_mu(GammaTuple& g, int k, const Partition& mu)
{
    switch (k) {
    case 0: g[Slot::mu1] = mu; return;
    case 1: g[Slot::mu2] = mu; return;
    case 2:
        g[Slot::xi1] = {};
        g[Slot::xi2] = {};
        g[Slot::xi3] = {};
        for (const auto& e : mu.entries()) {
            Slot s = e.value % 2 == 0 ? Slot::xi3 : (e.value % 4 == 3 ? Slot::xi1 : Slot::xi2);
            g[s].add(e.value, e.mult);
        }
        return;
    default: g[Slot::xi4] = mu; return;
    }
}

// A encodes tau1 = {(a+1)/2}; B \ {1} encodes tau2 = {(b-1)/2}.
Partition tau_of(const GVertex& v, int k)
{
    if (k == 0) return scaled(v.a, 1, 1, 2);
    Partition out;
    for (int b : v.b)
        if (b != 1) out.add((b - 1) / 2);
    return out;
}

void store_tau(GVertex& v, int k, const Partition& tau)
{
    if (k == 0) {
        v.a = unscaled<OddSet>(tau, 1, 1, 2);
    } else {
        OddSet b = unscaled<OddSet>(tau, 1, -1, 2);
        b.insert(1);
        v.b = std::move(b);
    }
}

int decode_triple(const GVertex& t)
{
    if (t.a.empty() && t.b.empty()) return 0;
    return t.b.empty() ? t.a.size() : -t.b.size();
}

} // namespace

MatchResult<SquarePair> t_match(const FullVertex& v)
{
    if (!in_t_domain(v)) throw std::invalid_argument("T is defined on class-0 vertices with mark (1,-)");
    FullVertex out = v;
    GammaTuple& g = out.gamma;
    GVertex& base = out.base.base;

    for (int k = 0; k < 4; ++k) {
        if (auto r = sq_diff_den(g[kRho[k]], t_mu(g, k))) {
            g[kRho[k]] = std::move(r->first);
            store_t_mu(g, k, r->second);
            return out;
        }
    }
    for (int k = 0; k < 4; ++k) {
        if (auto r = euler_identity_pair(g[kPi[k]], halve_mults(t_mu(g, k)))) {
            g[kPi[k]] = std::move(r->first);
            store_t_mu(g, k, double_mults(r->second));
            return out;
        }
    }
    if (auto r = reciprocal_pair(scaled(base.d, 1, 0, 2), g[Slot::xi5])) {
        base.d = unscaled<EvenSet>(r->first, 1, 0, 2);
        g[Slot::xi5] = std::move(r->second);
        return out;
    }
    constexpr std::array<Slot, 2> kNu = {Slot::nu1, Slot::nu2};
    for (int k = 0; k < 2; ++k) {
        if (auto r = sq_diff_num(tau_of(base, k), g[kNu[k]])) {
            store_tau(base, k, r->first);
            g[kNu[k]] = std::move(r->second);
            return out;
        }
    }
    // Remaining freedom: two triples (pi, pi, 2 nu) of the original graph.
    std::array<GVertex, 2> triples;
    for (int k = 0; k < 2; ++k) {
        triples[k] = GVertex{unscaled<OddSet>(g[kPi[2 * k]], 1, 0), unscaled<OddSet>(g[kPi[2 * k + 1]], 1, 0),
                             unscaled<EvenSet>(g[kNu[k]], 1, 0, 2), 0};
        if (auto w = j_match_core(triples[k])) {
            g[kPi[2 * k]] = scaled(w->a, 1, 0);
            g[kPi[2 * k + 1]] = scaled(w->b, 1, 0);
            g[kNu[k]] = scaled(w->d, 1, 0, 2);
            store_tau(base, k, g[kNu[k]]);
            return out;
        }
    }
    return SquarePair{decode_triple(triples[0]), decode_triple(triples[1])};
}

MatchResult<FactorWitness> o_match(const FullVertex& v)
{
    const int cls = v.cls();
    if (cls != 1 && cls != 2) throw std::invalid_argument("O is defined on class-1 and class-2 vertices");
    require_valid(v.base);
    FullVertex out = v;
    GammaTuple& g = out.gamma;
    GVertex& base = out.base.base;

    if (auto r = sq_diff_den(g[Slot::xi4], g[Slot::xi5])) {
        g[Slot::xi4] = std::move(r->first);
        g[Slot::xi5] = std::move(r->second);
        return out;
    }
    const Partition chi1 = halve_mults(g[Slot::xi5]);
    if (auto r = sq_diff_den(g[Slot::xi3], chi1)) {
        g[Slot::xi3] = std::move(r->first);
        g[Slot::xi5] = double_mults(r->second);
        return out;
    }
    const Partition chi2 = halve_mults(chi1);
    if (auto r = reciprocal_pair(scaled(base.d, 2, 0), chi2)) {
        base.d = unscaled<EvenSet>(r->first, 2, 0);
        g[Slot::xi5] = double_mults(double_mults(r->second));
        return out;
    }
    constexpr std::array<std::pair<Slot, Slot>, 6> kPairs = {{
        {Slot::nu1, Slot::mu1}, {Slot::nu2, Slot::mu2}, {Slot::pi1, Slot::rho1},
        {Slot::pi2, Slot::rho2}, {Slot::pi3, Slot::rho3}, {Slot::pi4, Slot::rho4},
    }};
    for (auto [distinct, free] : kPairs) {
        if (auto r = reciprocal_pair(g[distinct], g[free])) {
            g[distinct] = std::move(r->first);
            g[free] = std::move(r->second);
            return out;
        }
    }

    // A and B re-read as parts of fixed residue mod 4, paired with xi1
    // (3 mod 4) and xi2 (1 mod 4). The marked element is never moved.
    const Mark& mark = v.base.mark;
    const bool plus_side = mark.sign == MarkSign::plus;
    const int a_mul_add = cls == 1 ? 1 : -1; // A -> 2a+1 (class 1) or 2a-1 (class 2)
    const int b_mul_add = -a_mul_add;
    const Slot a_slot = cls == 1 ? Slot::xi1 : Slot::xi2;
    const Slot b_slot = cls == 1 ? Slot::xi2 : Slot::xi1;

    auto try_a = [&](int skip) -> bool {
        Partition a2 = scaled(base.a, 2, a_mul_add);
        auto r = skip ? reciprocal_pair_skip(a2, g[a_slot], skip) : reciprocal_pair(a2, g[a_slot]);
        if (!r) return false;
        base.a = unscaled<OddSet>(r->first, 2, a_mul_add);
        g[a_slot] = std::move(r->second);
        return true;
    };
    auto try_b = [&](int skip) -> bool {
        Partition b2 = scaled(base.b, 2, b_mul_add);
        auto r = skip ? reciprocal_pair_skip(b2, g[b_slot], skip) : reciprocal_pair(b2, g[b_slot]);
        if (!r) return false;
        base.b = unscaled<OddSet>(r->first, 2, b_mul_add);
        g[b_slot] = std::move(r->second);
        return true;
    };

    if (mark.sign == MarkSign::zero) {
        if (try_a(0) || try_b(0)) return out;
        throw ConstantTermResidual("O residual at the constant term (n = 0)");
    }
    const int element = (mark.j % 2 == 1) ? mark.j : mark.j - 1;
    int d = 0;
    if (plus_side) {
        d = 2 * element + a_mul_add;
        if (try_b(0) || try_a(d)) return out;
    } else {
        d = 2 * element + b_mul_add;
        if (try_a(0) || try_b(d)) return out;
    }

    // Residual: one marked element, and xi1/xi2 holding only copies of d.
    const Slot xi_slot = d % 4 == 3 ? Slot::xi1 : Slot::xi2;
    const long long n = weight(v).q_half / 2;
    const int repeats = g[xi_slot].count(d);
    if (n % d != 0 || n / d != repeats + 1)
        throw std::logic_error("O residual violates the exponent law: " + v.to_string());
    FactorWitness w;
    w.d = d;
    w.big_n = static_cast<int>(n / d);
    w.eps1 = cls - 1;
    w.eps2 = mark.j - element;
    return w;
}

FullVertex encode_witness(const FactorWitness& w)
{
    if (w.d < 1 || w.d % 2 == 0 || w.big_n < 1 || (w.eps1 != 0 && w.eps1 != 1) || (w.eps2 != 0 && w.eps2 != 1))
        throw std::invalid_argument("malformed witness");
    const int element = w.d % 4 == 1 ? (w.d + 1) / 2 : (w.d - 1) / 2;
    FullVertex v;
    v.base.base.cls = w.cls();
    if (w.mark_sign() == MarkSign::plus) {
        v.base.base.a = OddSet{element};
        v.base.mark = Mark::plus(w.mark_index());
    } else {
        v.base.base.b = OddSet{element};
        v.base.mark = Mark::minus(w.mark_index());
    }
    v.gamma[w.d % 4 == 3 ? Slot::xi1 : Slot::xi2] = Partition::repeated(w.d, w.big_n - 1);
    return v;
}

} // namespace twosq
