#include "twosq/triple_product.hpp"

#include <stdexcept>
#include <vector>

namespace twosq::triple_product {

Partition lambda_of(const OddSet& a, const OddSet& b)
{
    const int l = a.size();
    if (b.size() > l) throw std::invalid_argument("lambda_of expects |A| >= |B|");
    Partition out;
    int prev = -1;
    for (int j = 1; j <= l; ++j) {
        int gap = a[j - 1] - prev - 2;
        if (gap > 0) out.add(2 * (l - j + 1), gap / 2);
        prev = a[j - 1];
    }
    for (int j = 1; j <= b.size(); ++j) out.add(2 * l + b[j - 1] - (2 * j - 1));
    return out;
}

Image forward(const OddSet& a, const OddSet& b)
{
    if (a.size() >= b.size()) return {a.size() - b.size(), lambda_of(a, b)};
    return {a.size() - b.size(), lambda_of(b, a)};
}

std::pair<OddSet, OddSet> reverse(int n, const Partition& lambda)
{
    if (!lambda.all_even()) throw std::invalid_argument("reverse expects an all-even partition");
    if (n < 0) {
        auto [a, b] = reverse(-n, lambda);
        return {std::move(b), std::move(a)};
    }
    const int total = lambda.order();
    int found = -1;
    for (int i = 0; i <= total; ++i) {
        if (lambda.count_greater(2 * (n + i - 1)) >= i && lambda.count_greater(2 * (n + i)) <= i) {
            if (found >= 0) throw std::logic_error("reverse: index i is not unique");
            found = i;
        }
    }
    if (found < 0) throw std::logic_error("reverse: no admissible index i");

    const int l = n + found;
    std::vector<int> parts = lambda.expanded();
    std::vector<int> b_elems;
    const std::size_t first_b = parts.size() - static_cast<std::size_t>(found);
    for (std::size_t k = first_b; k < parts.size(); ++k) {
        int j = static_cast<int>(k - first_b) + 1;
        b_elems.push_back(parts[k] - 2 * l + 2 * j - 1);
    }
    Partition rest = Partition::from_parts(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(first_b)));
    std::vector<int> a_elems;
    int prev = -1;
    for (int j = 1; j <= l; ++j) {
        prev = prev + 2 + 2 * rest.count(2 * (l - j + 1));
        a_elems.push_back(prev);
    }
    return {OddSet(std::move(a_elems)), OddSet(std::move(b_elems))};
}

} // namespace twosq::triple_product
