#pragma once

#include "twosq/vertex.hpp"

#include <functional>
#include <optional>
#include <vector>

// Brute-force ground truth, written independently of the matchings.
namespace twosq::oracles {

// Ordered pairs (m1, m2) of integers with m1^2 + m2^2 = n.
long long r2_brute(long long n);

struct DivisorProfile {
    long long n = 0;
    int d1 = 0; // divisors = 1 mod 4
    int d3 = 0; // divisors = 3 mod 4
    bool operator==(const DivisorProfile&) const = default;
};
DivisorProfile divisor_counts(long long n);

// p(m) by the standard recurrence over part sizes.
long long partition_count(int m);

enum class Level { G, Gprime, Gpp };

// nullopt means every class.
using ClassFilter = std::optional<int>;

// Every vertex of the level with weight q_half <= max_q_half, each exactly
// once. The marked-level visitor may return false to skip a base (used to
// prune the gamma enumeration).
void for_each_g(ClassFilter cls, int max_q_half, const std::function<void(const GVertex&)>& fn);
void for_each_marked(ClassFilter cls, int max_q_half, const std::function<void(const MarkedVertex&)>& fn);
void for_each_full(ClassFilter cls, int max_q_half, const std::function<void(const FullVertex&)>& fn,
                   const std::function<bool(const MarkedVertex&)>& keep_base = {});

std::vector<GVertex> enumerate_g(ClassFilter cls, int max_q_half);
std::vector<MarkedVertex> enumerate_marked(ClassFilter cls, int max_q_half);
std::vector<FullVertex> enumerate_full(ClassFilter cls, int max_q_half);

// Number of vertices at each q_half in [0, max_q_half], by enumeration and
// by multiplying out the generating products.
std::vector<long long> slice_counts(Level level, ClassFilter cls, int max_q_half);
std::vector<long long> series_counts(Level level, ClassFilter cls, int max_q_half);

// Gamma tuples of total size s, for s <= max_sum (coefficient of q^s).
std::vector<long long> gamma_series(int max_sum);

} // namespace twosq::oracles
