#pragma once

#include "twosq/vertex.hpp"

#include <optional>

namespace twosq {

// The class-preserving part of the matching J (moving the smallest part
// between D and lambda(A, B)). Returns nullopt exactly on terminal vertices.
std::optional<GVertex> j_match_core(const GVertex& v);

// The perfect matching J on V0 u V1 u V2 and its lifts to marked vertices
// and to vertices carrying a gamma tuple. All three are involutions with
// weight(v) + weight(J(v)) = 0.
GVertex j_match(const GVertex& v);
MarkedVertex j_match(const MarkedVertex& v);
FullVertex j_match(const FullVertex& v);

// Class-0 vertices whose mark is (1,-); the domain of the matching T and
// the residual set of H.
bool in_t_domain(const MarkedVertex& v);
inline bool in_t_domain(const FullVertex& v) { return in_t_domain(v.base); }

// Toggles the element 1 of B on class-0 vertices. nullopt on the residual
// set (mark (1,-)). Throws for other classes.
std::optional<MarkedVertex> h_match(const MarkedVertex& v);
std::optional<FullVertex> h_match(const FullVertex& v);

} // namespace twosq
