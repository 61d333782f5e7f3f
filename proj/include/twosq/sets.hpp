#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twosq {

// Finite set of positive integers of one parity, kept strictly increasing.
// OddSet carries the A and B slots of a vertex, EvenSet the D slot.
template <int Residue>
class ParitySet {
public:
    ParitySet() = default;
    ParitySet(std::initializer_list<int> elems) : ParitySet(std::vector<int>(elems)) {}
    explicit ParitySet(std::vector<int> elems) : elems_(std::move(elems))
    {
        std::sort(elems_.begin(), elems_.end());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 1 || elems_[i] % 2 != Residue)
                throw std::invalid_argument("element has wrong parity or is not positive");
            if (i > 0 && elems_[i] == elems_[i - 1])
                throw std::invalid_argument("repeated element");
        }
    }

    // {1, 3, ..., 2k-1}
    static ParitySet min_set(int k)
        requires(Residue == 1)
    {
        ParitySet out;
        for (int i = 1; i <= k; ++i) out.elems_.push_back(2 * i - 1);
        return out;
    }

    bool is_min_set() const
        requires(Residue == 1)
    {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i] != static_cast<int>(2 * i + 1)) return false;
        return true;
    }

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    int front() const { return elems_.front(); }
    int back() const { return elems_.back(); }
    int operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
    long long sum() const { return std::accumulate(elems_.begin(), elems_.end(), 0LL); }
    bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
    int index_of(int x) const
    {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        return (it != elems_.end() && *it == x) ? static_cast<int>(it - elems_.begin()) : -1;
    }

    void insert(int x)
    {
        if (x < 1 || x % 2 != Residue) throw std::invalid_argument("element has wrong parity");
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it != elems_.end() && *it == x) throw std::logic_error("element already present");
        elems_.insert(it, x);
    }
    void erase(int x)
    {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || *it != x) throw std::logic_error("element not present");
        elems_.erase(it);
    }
    // Adds `delta` to every element at index >= from (0-based).
    void shift_from(int from, int delta)
    {
        for (std::size_t i = static_cast<std::size_t>(from); i < elems_.size(); ++i) elems_[i] += delta;
        const auto f = static_cast<std::size_t>(from);
        if (!elems_.empty() && (elems_.front() < 1 || (f > 0 && f < elems_.size() && elems_[f] <= elems_[f - 1])))
            throw std::logic_error("shift broke strict ordering");
    }

    const std::vector<int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    std::string to_string() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems_[i]);
        }
        return out + "]";
    }

    auto operator<=>(const ParitySet&) const = default;

private:
    std::vector<int> elems_;
};

using OddSet = ParitySet<1>;
using EvenSet = ParitySet<0>;

} // namespace twosq
