#include "twosq/vertex.hpp"

#include <stdexcept>

namespace twosq {

namespace {

constexpr std::array<std::string_view, kSlotCount> kSlotNames = {
    "mu1", "mu2", "nu1", "nu2", "xi1", "xi2", "xi3", "xi4", "xi5",
    "pi1", "pi2", "pi3", "pi4", "rho1", "rho2", "rho3", "rho4",
};

int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

bool holds_element(const OddSet& s, int j, int cls)
{
    if (cls == 0) return s.contains(j);
    return s.contains(j) || s.contains(j - 1);
}

} // namespace

bool GVertex::is_terminal() const
{
    if (!d.empty()) return false;
    return (b.empty() && a.is_min_set()) || (a.empty() && b.is_min_set());
}

std::string GVertex::to_string() const
{
    return "V" + std::to_string(cls) + "(A=" + a.to_string() + ";B=" + b.to_string() + ";D=" + d.to_string() + ")";
}

std::string Mark::to_string() const
{
    switch (sign) {
    case MarkSign::plus: return "(" + std::to_string(j) + ",+)";
    case MarkSign::minus: return "(" + std::to_string(j) + ",-)";
    case MarkSign::zero: break;
    }
    return "(0)";
}

std::string MarkedVertex::to_string() const { return base.to_string() + "@" + mark.to_string(); }

bool mark_is_valid(const GVertex& v, const Mark& m)
{
    if (v.cls < 0 || v.cls > 2) return false;
    switch (m.sign) {
    case MarkSign::zero: return v.cls == 2 && m.j == 0;
    case MarkSign::plus: return m.j >= 1 && holds_element(v.a, m.j, v.cls);
    case MarkSign::minus: return m.j >= 1 && holds_element(v.b, m.j, v.cls);
    }
    return false;
}

void require_valid(const MarkedVertex& v)
{
    if (!mark_is_valid(v.base, v.mark))
        throw std::invalid_argument("invalid mark " + v.mark.to_string() + " on " + v.base.to_string());
}

std::string_view slot_name(Slot s) { return kSlotNames[static_cast<std::size_t>(s)]; }

bool GammaTuple::all_empty() const
{
    for (const auto& p : slots)
        if (!p.empty()) return false;
    return true;
}

bool GammaTuple::is_valid() const
{
    const auto& s = *this;
    return s[Slot::nu1].is_distinct() && s[Slot::nu2].is_distinct() && s[Slot::xi1].all_congruent(4, 3) &&
           s[Slot::xi2].all_congruent(4, 1) && s[Slot::xi3].all_even() && s[Slot::pi1].is_distinct() &&
           s[Slot::pi2].is_distinct() && s[Slot::pi3].is_distinct() && s[Slot::pi4].is_distinct();
}

long long GammaTuple::total_sum() const
{
    long long t = 0;
    for (const auto& p : slots) t += p.sum();
    return t;
}

std::string GammaTuple::to_string() const
{
    std::string out = "gamma{";
    bool first = true;
    for (std::size_t i = 0; i < kSlotCount; ++i) {
        if (slots[i].empty()) continue;
        if (!first) out += ';';
        first = false;
        out += std::string(kSlotNames[i]) + "=" + slots[i].to_string();
    }
    return out + "}";
}

std::string FullVertex::to_string() const { return base.to_string() + "|" + gamma.to_string(); }

std::string Weight::to_string() const
{
    return std::string(sign > 0 ? "+" : "-") + "a^" + std::to_string(a_exp) + "*q^(" + std::to_string(q_half) + "/2)";
}

Weight weight(const GVertex& v)
{
    const int diff = v.a.size() - v.b.size();
    const long long total = v.a.sum() + v.b.sum() + v.d.sum();
    const int d_sign = parity_sign(v.d.size());
    switch (v.cls) {
    case 0: return {d_sign * parity_sign(diff), diff, diff + total};
    case 1: return {-d_sign, 2 * diff, 2LL * diff + 4 * total};
    case 2: return {d_sign, 2 * diff - 1, -2LL * diff + 4 * total};
    default: throw std::invalid_argument("vertex class must be 0, 1 or 2");
    }
}

Weight weight(const MarkedVertex& v)
{
    require_valid(v);
    Weight w = weight(v.base);
    w.a_exp = 0;
    if (v.mark.sign != MarkSign::plus) w.sign = -w.sign;
    return w;
}

Weight weight(const FullVertex& v)
{
    Weight w = weight(v.base);
    const auto& g = v.gamma;
    long long signed_parts = g[Slot::mu1].order() + g[Slot::mu2].order();
    for (Slot s : {Slot::xi1, Slot::xi2, Slot::xi3, Slot::xi4, Slot::pi1, Slot::pi2, Slot::pi3, Slot::pi4})
        signed_parts += g[s].order();
    w.sign *= parity_sign(signed_parts);
    w.q_half += 2 * g.total_sum();
    return w;
}

} // namespace twosq
