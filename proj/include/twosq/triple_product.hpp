#pragma once

#include "twosq/partition.hpp"
#include "twosq/sets.hpp"

#include <utility>

namespace twosq::triple_product {

// Image of a pair of odd sets: n = |A| - |B| and an all-even partition with
// n^2 + sum(lambda) = sum(A) + sum(B).
struct Image {
    int n = 0;
    Partition lambda;
    bool operator==(const Image&) const = default;
};

Image forward(const OddSet& a, const OddSet& b);

// Inverse of forward; negative n returns the swapped pair.
std::pair<OddSet, OddSet> reverse(int n, const Partition& lambda);

// lambda(A, B) for |A| >= |B|: the partition built from the gaps of A
// (parts <= 2|A|) and the offsets of B (parts >= 2|A|).
Partition lambda_of(const OddSet& a, const OddSet& b);

} // namespace twosq::triple_product
