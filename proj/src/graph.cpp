#include "twosq/graph.hpp"

#include "twosq/triple_product.hpp"

#include <stdexcept>

namespace twosq {

namespace {

enum class MoveKind { grow_min, increment, shrink_min, decrement };

// One application of J cases 1-4, expressed in the frame where P is the
// larger of A and B (P = A unless |B| > |A|).
struct CoreMove {
    GVertex image;
    bool swapped = false;
    MoveKind kind{};
    int from = 0; // first shifted index (0-based) for increment/decrement
};

std::optional<CoreMove> core_move(const GVertex& v)
{
    CoreMove mv;
    mv.swapped = v.b.size() > v.a.size();
    OddSet p = mv.swapped ? v.b : v.a;
    OddSet q = mv.swapped ? v.a : v.b;
    EvenSet d = v.d;
    const int l = p.size();
    const Partition lambda = triple_product::lambda_of(p, q);
    if (lambda.empty() && d.empty()) return std::nullopt;

    if (!d.empty() && (lambda.empty() || d.front() <= lambda.smallest())) {
        const int d1 = d.front();
        d.erase(d1);
        if (d1 > 2 * l) {
            if (!p.is_min_set()) throw std::logic_error("J: expected minimal set in growth case");
            mv.kind = MoveKind::grow_min;
            p = OddSet::min_set(l + 1);
            q.insert(d1 - 1 - 2 * l);
        } else {
            mv.kind = MoveKind::increment;
            mv.from = (2 * l - d1 + 2) / 2 - 1;
            p.shift_from(mv.from, 2);
        }
    } else {
        const int lambda1 = lambda.smallest();
        d.insert(lambda1);
        if (p.is_min_set()) {
            mv.kind = MoveKind::shrink_min;
            p = OddSet::min_set(l - 1);
            q.erase(q.front());
        } else {
            mv.kind = MoveKind::decrement;
            mv.from = (2 * l - lambda1 + 2) / 2 - 1;
            p.shift_from(mv.from, -2);
        }
    }
    mv.image = mv.swapped ? GVertex{q, p, d, v.cls} : GVertex{p, q, d, v.cls};
    return mv;
}

enum class TerminalShape { empty, a_min, b_min };

TerminalShape shape_of(const GVertex& v)
{
    if (v.a.empty() && v.b.empty()) return TerminalShape::empty;
    return v.b.empty() ? TerminalShape::a_min : TerminalShape::b_min;
}

GVertex terminal(TerminalShape s, int k, int cls)
{
    if (k == 0 || s == TerminalShape::empty) return GVertex{{}, {}, {}, cls};
    if (s == TerminalShape::a_min) return GVertex{OddSet::min_set(k), {}, {}, cls};
    return GVertex{{}, OddSet::min_set(k), {}, cls};
}

// J on terminal vertices: changes class, pairing the theta-series terms.
GVertex j_terminal(const GVertex& v)
{
    const TerminalShape s = shape_of(v);
    const int k = std::max(v.a.size(), v.b.size());
    switch (v.cls) {
    case 0:
        if (s == TerminalShape::empty) return terminal(s, 0, 1);
        if (k % 2 == 0) return terminal(s, k / 2, 1);
        return s == TerminalShape::a_min ? terminal(s, (k + 1) / 2, 2) : terminal(s, (k - 1) / 2, 2);
    case 1:
        return terminal(s, 2 * k, 0);
    case 2:
        if (s == TerminalShape::a_min) return terminal(s, 2 * k - 1, 0);
        return terminal(TerminalShape::b_min, 2 * k + 1, 0);
    default:
        throw std::invalid_argument("vertex class must be 0, 1 or 2");
    }
}

MarkedVertex j_terminal_marked(const MarkedVertex& mv)
{
    const GVertex& v = mv.base;
    const Mark& m = mv.mark;
    const GVertex w = j_terminal(v);
    const int j = m.j;
    switch (v.cls) {
    case 0:
        if (w.cls == 1) return {w, Mark{(j + 1) / 2, m.sign}};
        if (m.sign == MarkSign::plus) return {w, Mark::plus((j + 3) / 2)};
        return {w, j == 1 ? Mark::zero() : Mark::minus((j - 1) / 2)};
    case 1:
        return {w, Mark{2 * j - 1, m.sign}};
    default:
        break;
    }
    // class 2
    if (shape_of(v) == TerminalShape::a_min) {
        if (m.sign == MarkSign::zero) return {v, Mark::plus(1)};
        if (j == 1) return {v, Mark::zero()};
        return {w, Mark::plus(2 * j - 3)};
    }
    if (m.sign == MarkSign::zero) return {w, Mark::minus(1)};
    return {w, Mark::minus(2 * j + 1)};
}

int element_of(const Mark& m, int cls)
{
    if (cls == 0 || m.j % 2 == 1) return m.j;
    return m.j - 1;
}

MarkedVertex j_nonterminal_marked(const MarkedVertex& mv, const CoreMove& move)
{
    const GVertex& v = mv.base;
    const Mark& m = mv.mark;
    if (m.sign == MarkSign::zero) return {move.image, m};

    const MarkSign p_sign = move.swapped ? MarkSign::minus : MarkSign::plus;
    const MarkSign q_sign = move.swapped ? MarkSign::plus : MarkSign::minus;
    const OddSet& p = move.swapped ? v.b : v.a;
    const OddSet& q = move.swapped ? v.a : v.b;
    const int e = element_of(m, v.cls);
    const int offset = m.j - e;
    const bool on_p = m.sign == p_sign;

    switch (move.kind) {
    case MoveKind::grow_min:
        return {move.image, m};
    case MoveKind::shrink_min:
        // The last element of the minimal set and the first of the other
        // set leave together; their marks cancel inside v.
        if (on_p && e == p.back()) return {v, Mark{q.front() + offset, q_sign}};
        if (!on_p && e == q.front()) return {v, Mark{p.back() + offset, p_sign}};
        return {move.image, m};
    case MoveKind::increment:
    case MoveKind::decrement:
        if (on_p && p.index_of(e) >= move.from)
            return {move.image, Mark{m.j + (move.kind == MoveKind::increment ? 2 : -2), m.sign}};
        return {move.image, m};
    }
    throw std::logic_error("unreachable");
}

} // namespace

std::optional<GVertex> j_match_core(const GVertex& v)
{
    auto mv = core_move(v);
    if (!mv) return std::nullopt;
    return mv->image;
}

GVertex j_match(const GVertex& v)
{
    if (auto mv = core_move(v)) return mv->image;
    return j_terminal(v);
}

MarkedVertex j_match(const MarkedVertex& v)
{
    require_valid(v);
    if (auto mv = core_move(v.base)) return j_nonterminal_marked(v, *mv);
    return j_terminal_marked(v);
}

FullVertex j_match(const FullVertex& v) { return {j_match(v.base), v.gamma}; }

bool in_t_domain(const MarkedVertex& v)
{
    return v.base.cls == 0 && v.mark == Mark::minus(1);
}

std::optional<MarkedVertex> h_match(const MarkedVertex& v)
{
    require_valid(v);
    if (v.base.cls != 0) throw std::invalid_argument("H is defined on class-0 vertices only");
    if (in_t_domain(v)) return std::nullopt;
    MarkedVertex out = v;
    if (out.base.b.contains(1))
        out.base.b.erase(1);
    else
        out.base.b.insert(1);
    return out;
}

std::optional<FullVertex> h_match(const FullVertex& v)
{
    auto base = h_match(v.base);
    if (!base) return std::nullopt;
    return FullVertex{*base, v.gamma};
}

} // namespace twosq
