#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twosq {

// A partition stored sparsely as (part value, multiplicity) pairs in
// increasing order of value. Zero multiplicities are never stored, so
// structural equality is equality of multisets.
class Partition {
public:
    struct Entry {
        int value;
        int mult;
        auto operator<=>(const Entry&) const = default;
    };

    Partition() = default;
    Partition(std::initializer_list<int> parts);

    static Partition from_parts(const std::vector<int>& parts);
    // Single part `value` repeated `mult` times.
    static Partition repeated(int value, int mult);

    int count(int value) const;
    void add(int value, int k = 1);
    void remove(int value, int k = 1);
    void set(int value, int mult);

    bool empty() const { return entries_.empty(); }
    long long sum() const;
    int order() const;
    int count_greater(int j) const;
    int smallest() const;
    int largest() const;

    bool is_distinct() const;
    bool all_odd() const { return all_congruent(2, 1); }
    bool all_even() const { return all_congruent(2, 0); }
    bool all_congruent(int modulus, int residue) const;
    bool all_mults_even() const;

    const std::vector<Entry>& entries() const { return entries_; }
    // Parts in increasing order, repeated according to multiplicity.
    std::vector<int> expanded() const;

    // `1^2 4^1`, or `-` for the empty partition.
    std::string to_string() const;
    static Partition parse(std::string_view text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Entry>::iterator find_slot(int value);
    std::vector<Entry> entries_;
};

using PartitionPair = std::pair<Partition, Partition>;

// The sign-reversing pair operations. Each returns nullopt on its residual
// set and is otherwise an involution that conserves sum(l)+sum(m) and moves
// exactly one part.

// (distinct, any): toggle one part n between the two at the smallest
// populated index n (optionally never using index `skip`).
std::optional<PartitionPair> reciprocal_pair(const Partition& lambda, const Partition& mu);
std::optional<PartitionPair> reciprocal_pair_skip(const Partition& lambda, const Partition& mu, int skip);

// (any, any): smallest n with (lambda(n) != 0 and mu(n) even) or mu(n) odd.
std::optional<PartitionPair> sq_diff_den(const Partition& lambda, const Partition& mu);

// (distinct, distinct): swap multiplicities at the smallest differing index.
std::optional<PartitionPair> sq_diff_num(const Partition& lambda, const Partition& mu);

// (distinct, all even): toggle one even part at the smallest even index
// populated in either partition.
std::optional<PartitionPair> euler_identity_pair(const Partition& lambda, const Partition& mu);

} // namespace twosq
