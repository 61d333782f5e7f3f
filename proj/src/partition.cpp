#include "twosq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace twosq {

Partition::Partition(std::initializer_list<int> parts)
{
    for (int p : parts) add(p);
}

Partition Partition::from_parts(const std::vector<int>& parts)
{
    Partition out;
    for (int p : parts) out.add(p);
    return out;
}

Partition Partition::repeated(int value, int mult)
{
    Partition out;
    out.set(value, mult);
    return out;
}

std::vector<Partition::Entry>::iterator Partition::find_slot(int value)
{
    return std::lower_bound(entries_.begin(), entries_.end(), value,
                            [](const Entry& e, int v) { return e.value < v; });
}

int Partition::count(int value) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, int v) { return e.value < v; });
    return (it != entries_.end() && it->value == value) ? it->mult : 0;
}

void Partition::add(int value, int k)
{
    if (value < 1) throw std::invalid_argument("partition parts must be positive");
    if (k < 0) throw std::invalid_argument("negative multiplicity");
    if (k == 0) return;
    auto it = find_slot(value);
    if (it != entries_.end() && it->value == value)
        it->mult += k;
    else
        entries_.insert(it, Entry{value, k});
}

void Partition::remove(int value, int k)
{
    auto it = find_slot(value);
    if (it == entries_.end() || it->value != value || it->mult < k)
        throw std::logic_error("removing a part that is not present");
    it->mult -= k;
    if (it->mult == 0) entries_.erase(it);
}

void Partition::set(int value, int mult)
{
    if (value < 1) throw std::invalid_argument("partition parts must be positive");
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    auto it = find_slot(value);
    bool present = it != entries_.end() && it->value == value;
    if (mult == 0) {
        if (present) entries_.erase(it);
    } else if (present) {
        it->mult = mult;
    } else {
        entries_.insert(it, Entry{value, mult});
    }
}

long long Partition::sum() const
{
    long long s = 0;
    for (const auto& e : entries_) s += static_cast<long long>(e.value) * e.mult;
    return s;
}

int Partition::order() const
{
    int s = 0;
    for (const auto& e : entries_) s += e.mult;
    return s;
}

int Partition::count_greater(int j) const
{
    int s = 0;
    for (const auto& e : entries_)
        if (e.value > j) s += e.mult;
    return s;
}

int Partition::smallest() const
{
    if (entries_.empty()) throw std::logic_error("smallest part of empty partition");
    return entries_.front().value;
}

int Partition::largest() const
{
    if (entries_.empty()) throw std::logic_error("largest part of empty partition");
    return entries_.back().value;
}

bool Partition::is_distinct() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.mult == 1; });
}

bool Partition::all_congruent(int modulus, int residue) const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.value % modulus == residue; });
}

bool Partition::all_mults_even() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.mult % 2 == 0; });
}

std::vector<int> Partition::expanded() const
{
    std::vector<int> out;
    for (const auto& e : entries_) out.insert(out.end(), e.mult, e.value);
    return out;
}

std::string Partition::to_string() const
{
    if (entries_.empty()) return "-";
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e.value) + '^' + std::to_string(e.mult);
    }
    return out;
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    Partition out;
    if (text == "-") return out;
    while (!text.empty()) {
        auto end = text.find(' ');
        auto token = text.substr(0, end);
        auto caret = token.find('^');
        if (caret == std::string_view::npos) throw std::invalid_argument("bad partition token");
        int value = 0, mult = 0;
        auto v = token.substr(0, caret), m = token.substr(caret + 1);
        if (std::from_chars(v.data(), v.data() + v.size(), value).ec != std::errc{} ||
            std::from_chars(m.data(), m.data() + m.size(), mult).ec != std::errc{} || mult < 1)
            throw std::invalid_argument("bad partition token");
        if (out.count(value) != 0) throw std::invalid_argument("repeated part value");
        out.set(value, mult);
        text = end == std::string_view::npos ? std::string_view{} : trim(text.substr(end));
    }
    return out;
}

namespace {

// Visits the union of both supports in increasing order until `visit`
// returns true; returns the accepted index or 0.
template <typename Visit>
int scan_merged(const Partition& a, const Partition& b, Visit visit)
{
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, k = 0;
    while (i < ea.size() || k < eb.size()) {
        int n;
        if (k == eb.size() || (i < ea.size() && ea[i].value < eb[k].value))
            n = ea[i++].value;
        else if (i == ea.size() || eb[k].value < ea[i].value)
            n = eb[k++].value;
        else {
            n = ea[i].value;
            ++i;
            ++k;
        }
        if (visit(n)) return n;
    }
    return 0;
}

PartitionPair toggle_reciprocal(Partition lambda, Partition mu, int n)
{
    if (lambda.count(n) != 0) {
        lambda.remove(n);
        mu.add(n);
    } else {
        lambda.add(n);
        mu.remove(n);
    }
    return {std::move(lambda), std::move(mu)};
}

} // namespace

std::optional<PartitionPair> reciprocal_pair(const Partition& lambda, const Partition& mu)
{
    int n = scan_merged(lambda, mu, [](int) { return true; });
    if (n == 0) return std::nullopt;
    return toggle_reciprocal(lambda, mu, n);
}

std::optional<PartitionPair> reciprocal_pair_skip(const Partition& lambda, const Partition& mu, int skip)
{
    int n = scan_merged(lambda, mu, [skip](int v) { return v != skip; });
    if (n == 0) return std::nullopt;
    return toggle_reciprocal(lambda, mu, n);
}

std::optional<PartitionPair> sq_diff_den(const Partition& lambda, const Partition& mu)
{
    bool moves_from_lambda = false;
    int n = scan_merged(lambda, mu, [&](int v) {
        int m = mu.count(v);
        if (m % 2 == 1) {
            moves_from_lambda = false;
            return true;
        }
        if (lambda.count(v) != 0) {
            moves_from_lambda = true;
            return true;
        }
        return false;
    });
    if (n == 0) return std::nullopt;
    Partition l = lambda, m = mu;
    if (moves_from_lambda) {
        l.remove(n);
        m.add(n);
    } else {
        l.add(n);
        m.remove(n);
    }
    return PartitionPair{std::move(l), std::move(m)};
}

std::optional<PartitionPair> sq_diff_num(const Partition& lambda, const Partition& mu)
{
    int n = scan_merged(lambda, mu, [&](int v) { return lambda.count(v) != mu.count(v); });
    if (n == 0) return std::nullopt;
    Partition l = lambda, m = mu;
    int ln = l.count(n), mn = m.count(n);
    l.set(n, mn);
    m.set(n, ln);
    return PartitionPair{std::move(l), std::move(m)};
}

std::optional<PartitionPair> euler_identity_pair(const Partition& lambda, const Partition& mu)
{
    int n = scan_merged(lambda, mu, [](int v) { return v % 2 == 0; });
    if (n == 0) return std::nullopt;
    return toggle_reciprocal(lambda, mu, n);
}

} // namespace twosq
