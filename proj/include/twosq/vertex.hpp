#pragma once

#include "twosq/partition.hpp"
#include "twosq/sets.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace twosq {

// A vertex (A, B, D; i) of one of the three families V0, V1, V2.
struct GVertex {
    OddSet a;
    OddSet b;
    EvenSet d;
    int cls = 0;

    bool is_terminal() const;
    std::string to_string() const;
    auto operator<=>(const GVertex&) const = default;
};

enum class MarkSign { plus, minus, zero };

// Derivative marker (j, +), (j, -) or the bare 0-mark of class 2.
struct Mark {
    int j = 0;
    MarkSign sign = MarkSign::zero;

    static Mark plus(int j) { return {j, MarkSign::plus}; }
    static Mark minus(int j) { return {j, MarkSign::minus}; }
    static Mark zero() { return {0, MarkSign::zero}; }

    std::string to_string() const;
    auto operator<=>(const Mark&) const = default;
};

struct MarkedVertex {
    GVertex base;
    Mark mark;

    std::string to_string() const;
    auto operator<=>(const MarkedVertex&) const = default;
};

// True when the mark sits on an element of base (or, for class 2, is the
// 0-mark) as the derivative bookkeeping requires.
bool mark_is_valid(const GVertex& v, const Mark& m);
void require_valid(const MarkedVertex& v);

// The 17 partition slots attached to each marked vertex.
enum class Slot : std::size_t {
    mu1, mu2, nu1, nu2,
    xi1, xi2, xi3, xi4, xi5,
    pi1, pi2, pi3, pi4,
    rho1, rho2, rho3, rho4,
};
inline constexpr std::size_t kSlotCount = 17;

std::string_view slot_name(Slot s);

struct GammaTuple {
    std::array<Partition, kSlotCount> slots;

    Partition& operator[](Slot s) { return slots[static_cast<std::size_t>(s)]; }
    const Partition& operator[](Slot s) const { return slots[static_cast<std::size_t>(s)]; }

    bool all_empty() const;
    // Checks the per-slot constraints (distinct nu/pi, residues of xi1..xi3).
    bool is_valid() const;
    long long total_sum() const;
    std::string to_string() const;
    auto operator<=>(const GammaTuple&) const = default;
};

struct FullVertex {
    MarkedVertex base;
    GammaTuple gamma;

    int cls() const { return base.base.cls; }
    std::string to_string() const;
    auto operator<=>(const FullVertex&) const = default;
};

// Signed monomial sign * a^a_exp * q^(q_half / 2).
struct Weight {
    int sign = 1;
    int a_exp = 0;
    long long q_half = 0;

    Weight negated() const { return {-sign, a_exp, q_half}; }
    bool cancels(const Weight& o) const { return sign == -o.sign && a_exp == o.a_exp && q_half == o.q_half; }
    std::string to_string() const;
    bool operator==(const Weight&) const = default;
};

Weight weight(const GVertex& v);
Weight weight(const MarkedVertex& v);
Weight weight(const FullVertex& v);

} // namespace twosq
