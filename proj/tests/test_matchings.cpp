#include "twosq/matchings.hpp"
#include "twosq/oracles.hpp"
#include "twosq/suites.hpp"

#include <doctest.h>

#include <set>

using namespace twosq;

namespace {

FullVertex t_vertex()
{
    return FullVertex{{GVertex{{}, {1}, {}, 0}, Mark::minus(1)}, {}};
}

} // namespace

TEST_CASE("witness and pair text forms")
{
    CHECK(SquarePair{-1, 0}.to_string() == "(-1,0)");
    CHECK(FactorWitness{1, 1, 0, 0}.to_string() == "(1,1;1,1,-)");
    CHECK(FactorWitness{1, 1, 0, 1}.to_string() == "(1,1;1,2,-)");
    CHECK(FactorWitness{1, 1, 1, 0}.to_string() == "(1,1;2,1,+)");
    CHECK(FactorWitness{1, 1, 1, 1}.to_string() == "(1,1;2,2,+)");
    CHECK(FactorWitness{9, 1, 0, 0}.to_string() == "(9,1;1,5,-)");
    CHECK(FactorWitness{1, 9, 1, 1}.to_string() == "(1,9;2,2,+)");
    CHECK(FactorWitness{3, 3, 0, 0}.to_string() == "(3,3;1,1,+)");
    CHECK(FactorWitness{3, 3, 1, 1}.to_string() == "(3,3;2,2,-)");
}

TEST_CASE("T residual at the constant term")
{
    const auto r = t_match(t_vertex());
    REQUIRE(std::holds_alternative<SquarePair>(r));
    CHECK(std::get<SquarePair>(r) == SquarePair{0, 0});
}

TEST_CASE("T moves a part out of rho first")
{
    FullVertex v = t_vertex();
    v.gamma[Slot::rho1] = {1};
    const auto r = t_match(v);
    REQUIRE(std::holds_alternative<FullVertex>(r));
    const auto& p = std::get<FullVertex>(r);
    CHECK(p.gamma[Slot::rho1].empty());
    CHECK(p.gamma[Slot::mu1] == Partition({1}));
    CHECK(p.base == v.base);
    const auto back = t_match(p);
    REQUIRE(std::holds_alternative<FullVertex>(back));
    CHECK(std::get<FullVertex>(back) == v);
}

TEST_CASE("T rejects vertices outside its domain")
{
    CHECK_THROWS_AS(t_match(FullVertex{{GVertex{{1}, {}, {}, 0}, Mark::plus(1)}, {}}), std::invalid_argument);
}

TEST_CASE("O moves a part between xi4 and xi5 first")
{
    FullVertex v{{GVertex{{}, {}, {}, 2}, Mark::zero()}, {}};
    v.gamma[Slot::xi4] = {1};
    const auto r = o_match(v);
    REQUIRE(std::holds_alternative<FullVertex>(r));
    const auto& p = std::get<FullVertex>(r);
    CHECK(p.gamma[Slot::xi4].empty());
    CHECK(p.gamma[Slot::xi5] == Partition({1}));
}

TEST_CASE("O residuals")
{
    CHECK(std::get<FactorWitness>(o_match(encode_witness({1, 1, 0, 0}))) == FactorWitness{1, 1, 0, 0});
    CHECK_THROWS_AS(o_match(FullVertex{{GVertex{{}, {}, {}, 2}, Mark::zero()}, {}}), ConstantTermResidual);
    CHECK_THROWS_AS(o_match(t_vertex()), std::invalid_argument);
}

TEST_CASE("every odd-divisor witness up to n = 200 is an O residual that decodes to itself")
{
    for (int n = 1; n <= 200; ++n) {
        std::set<FactorWitness> seen;
        for (int d = 1; d <= n; d += 2) {
            if (n % d != 0) continue;
            for (int e1 = 0; e1 < 2; ++e1)
                for (int e2 = 0; e2 < 2; ++e2) {
                    const FactorWitness w{d, n / d, e1, e2};
                    const FullVertex v = encode_witness(w);
                    CHECK(weight(v).q_half == 2 * n);
                    const auto r = o_match(v);
                    REQUIRE(std::holds_alternative<FactorWitness>(r));
                    CHECK(std::get<FactorWitness>(r) == w);
                    seen.insert(std::get<FactorWitness>(r));
                }
        }
        const auto div = oracles::divisor_counts(n);
        CHECK(static_cast<int>(seen.size()) == 4 * (div.d1 + div.d3));
    }
}

TEST_CASE("T is an involution with square-pair residuals up to q_half 16")
{
    const auto r = suites::t_suite(16);
    INFO(r.counterexample);
    CHECK(r.ok);
    CHECK(r.residuals > 0);
}

TEST_CASE("O is an involution with witness residuals up to q_half 16")
{
    const auto r = suites::o_suite(16);
    INFO(r.counterexample);
    CHECK(r.ok);
    CHECK(r.residuals > 0);
}
