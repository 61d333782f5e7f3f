#pragma once

#include "twosq/vertex.hpp"

#include <compare>
#include <string>
#include <variant>

namespace twosq {

struct SquarePair {
    int m1 = 0;
    int m2 = 0;
    long long norm() const { return 1LL * m1 * m1 + 1LL * m2 * m2; }
    std::string to_string() const;
    auto operator<=>(const SquarePair&) const = default;
};

// Factorization n = d * N with two bits. eps1 selects the vertex class
// (0 -> class 1, 1 -> class 2); eps2 selects which of the two marks j, j+1
// attached to the distinguished set element carries the derivative.
struct FactorWitness {
    int d = 1;
    int big_n = 1;
    int eps1 = 0;
    int eps2 = 0;

    long long n() const { return 1LL * d * big_n; }
    int cls() const { return eps1 + 1; }
    // Sign of the mark carrying the witness: + for (d=1 mod 4, class 2) and
    // (d=3 mod 4, class 1), - otherwise.
    MarkSign mark_sign() const;
    // The mark index j of the residual vertex.
    int mark_index() const;
    // `(d,N;i,j,s)`: class i, mark index j, mark sign s.
    std::string to_string() const;
    auto operator<=>(const FactorWitness&) const = default;
};

using Endpoint = std::variant<SquarePair, FactorWitness>;
std::string to_string(const Endpoint& e);

// Outcome of a local matching: a partner vertex or a decoded residual.
template <typename R>
using MatchResult = std::variant<FullVertex, R>;

// The matching T on class-0 vertices with mark (1,-). Residuals are the
// vertices whose gamma tuple is two terminal triples in the pi slots.
MatchResult<SquarePair> t_match(const FullVertex& v);

// The matching O on class-1 and class-2 vertices. Residuals are the
// single-element vertices with a repeated part of d in xi1 or xi2 (or the
// empty class-2 vertex with the 0-mark, which only occurs at n = 0).
MatchResult<FactorWitness> o_match(const FullVertex& v);

// Builds the O-residual vertex carrying a witness; o_match on the result
// returns the same witness.
FullVertex encode_witness(const FactorWitness& w);

// Thrown by o_match for the n = 0 residual, which carries no witness.
struct ConstantTermResidual : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace twosq
