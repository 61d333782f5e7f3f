#include "twosq/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace twosq;
using namespace twosq::oracles;

TEST_CASE("r2 by scanning")
{
    CHECK(r2_brute(0) == 1);
    CHECK(r2_brute(1) == 4);
    CHECK(r2_brute(9) == 4);
    CHECK(r2_brute(25) == 12);
    CHECK(r2_brute(3) == 0);
}

TEST_CASE("divisor counts")
{
    CHECK(divisor_counts(1) == DivisorProfile{1, 1, 0});
    CHECK(divisor_counts(9) == DivisorProfile{9, 2, 1});
    CHECK(divisor_counts(3) == DivisorProfile{3, 1, 1});
    CHECK_THROWS(divisor_counts(0));
}

TEST_CASE("r2(n) = 4(d1(n) - d3(n)) for n up to 500")
{
    for (int n = 1; n <= 500; ++n) {
        const auto p = divisor_counts(n);
        CHECK(r2_brute(n) == 4LL * (p.d1 - p.d3));
    }
}

TEST_CASE("partition numbers")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(20) == 627);
}

TEST_CASE("small slices")
{
    const auto zero = enumerate_g(0, 0);
    // Besides the empty vertex, B = {1} costs nothing in class 0.
    CHECK(std::count(zero.begin(), zero.end(), GVertex{{}, {}, {}, 0}) == 1);
    CHECK(std::count(zero.begin(), zero.end(), GVertex{{}, {1}, {}, 0}) == 1);
    for (const auto& v : zero) CHECK(weight(v).q_half == 0);

    const auto two = enumerate_g(std::nullopt, 2);
    for (int c = 0; c < 3; ++c) CHECK(std::count(two.begin(), two.end(), GVertex{{}, {}, {}, c}) == 1);
    CHECK(std::count(two.begin(), two.end(), GVertex{{1}, {}, {}, 0}) == 1);
    CHECK(std::count(two.begin(), two.end(), GVertex{{}, {1}, {}, 0}) == 1);
}

TEST_CASE("slices are duplicate-free")
{
    const auto g = enumerate_g(std::nullopt, 16);
    CHECK(std::set<GVertex>(g.begin(), g.end()).size() == g.size());
    const auto m = enumerate_marked(std::nullopt, 14);
    CHECK(std::set<MarkedVertex>(m.begin(), m.end()).size() == m.size());
    const auto f = enumerate_full(std::nullopt, 8);
    CHECK(std::set<FullVertex>(f.begin(), f.end()).size() == f.size());
    for (const auto& v : f) CHECK(v.gamma.is_valid());
}

TEST_CASE("slice counts agree with the product series")
{
    for (ClassFilter c : {ClassFilter{}, ClassFilter{0}, ClassFilter{1}, ClassFilter{2}}) {
        CHECK(slice_counts(Level::G, c, 24) == series_counts(Level::G, c, 24));
        CHECK(slice_counts(Level::Gprime, c, 20) == series_counts(Level::Gprime, c, 20));
        CHECK(slice_counts(Level::Gpp, c, 12) == series_counts(Level::Gpp, c, 12));
    }
}

TEST_CASE("gamma series")
{
    const auto g = gamma_series(2);
    CHECK(g[0] == 1);
    // size 1: a single part 1 in any slot that admits it (all but xi1, xi3).
    CHECK(g[1] == 15);
}
