#include "twosq/oracles.hpp"
#include "twosq/walker.hpp"

#include <doctest.h>

#include <algorithm>

using namespace twosq;

TEST_CASE("start vertices")
{
    CHECK(encode_start({1, 1, 0, 0}).to_string() == "V1(A=[];B=[1];D=[])@(1,-)|gamma{}");
    CHECK(encode_start({1, 1, 1, 1}).to_string() == "V2(A=[1];B=[];D=[])@(2,+)|gamma{}");
    const auto v = encode_start({5, 1, 0, 0});
    CHECK(std::get<FactorWitness>(o_match(v)) == FactorWitness{5, 1, 0, 0});
    CHECK_THROWS_AS(encode_start({3, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("witness enumeration")
{
    CHECK(factors_1mod4(9).size() == 8);
    CHECK(factors_1mod4(9).front() == FactorWitness{9, 1, 0, 0});
    CHECK(factors_3mod4(9).size() == 4);
    CHECK(factors_3mod4(2).empty());
    CHECK(square_pairs(25).size() == 12);
}

TEST_CASE("n = 1")
{
    const auto rows = jacobi_table(1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].endpoint == Endpoint{SquarePair{-1, 0}});
    CHECK(rows[1].endpoint == Endpoint{SquarePair{0, -1}});
    CHECK(rows[2].endpoint == Endpoint{SquarePair{0, 1}});
    CHECK(rows[3].endpoint == Endpoint{SquarePair{1, 0}});
    CHECK(rows[0].word == "TOTO");
    CHECK(rows[2].word == "OTO");
    CHECK(rows[3].word == "HTOTO");
    for (const auto& r : rows) CHECK(r.edge_pairs == r.word.size());
}

TEST_CASE("n = 2 and n = 3")
{
    for (const auto& r : jacobi_table(2)) CHECK(std::holds_alternative<SquarePair>(r.endpoint));
    for (const auto& r : jacobi_table(3)) {
        REQUIRE(std::holds_alternative<FactorWitness>(r.endpoint));
        CHECK(std::get<FactorWitness>(r.endpoint).d == 3);
    }
}

TEST_CASE("n = 9 endpoints")
{
    std::vector<Endpoint> got;
    for (const auto& r : jacobi_table(9)) got.push_back(r.endpoint);
    std::vector<Endpoint> want = {SquarePair{0, 3}, SquarePair{0, -3}, SquarePair{-3, 0}, SquarePair{3, 0},
                                  FactorWitness{3, 3, 0, 0}, FactorWitness{3, 3, 0, 1}, FactorWitness{3, 3, 1, 0},
                                  FactorWitness{3, 3, 1, 1}};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("traces alternate J with a local matching and never repeat a vertex")
{
    WalkOptions opts;
    opts.record_trace = true;
    opts.cycle_check = CycleCheck::visited_set;
    for (const auto& w : factors_1mod4(5)) {
        const auto r = walk(w, opts);
        REQUIRE(r.trace.size() == 2 * r.edge_pairs + 1);
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            if (i % 2 == 0)
                CHECK(r.trace[i].matching == Matching::J);
            else
                CHECK(r.trace[i].matching != Matching::J);
        }
        CHECK(r.h_count + r.t_count + r.o_count == r.edge_pairs);
    }
}

TEST_CASE("walks are deterministic")
{
    WalkOptions opts;
    opts.record_trace = true;
    const FactorWitness w{1, 6, 1, 0};
    CHECK(walk(w, opts) == walk(w, opts));
}

TEST_CASE("observer sees every edge")
{
    WalkOptions opts;
    std::uint64_t last = 0;
    opts.observer = [&](std::uint64_t step, Matching, const FullVertex&) { last = step; };
    const auto r = walk({1, 2, 0, 0}, opts);
    CHECK(last == 2 * r.edge_pairs + 1);
}

TEST_CASE("deadline")
{
    WalkOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(walk({1, 12, 0, 0}, opts), WalkTimeout);
}

TEST_CASE("word summary")
{
    CHECK(word_summary("TOTO") == "T,O,T,O");
    CHECK(word_summary("HHHHHHHTTTTTOO") == "H=7;T=5;O=2");
    CHECK(word_summary("") == "");
}

TEST_CASE("walk bijection agrees with the oracles for n up to 12")
{
    for (int n = 1; n <= 12; ++n) {
        const auto rows = jacobi_table(n);
        long long squares = 0;
        for (const auto& r : rows) squares += std::holds_alternative<SquarePair>(r.endpoint);
        const auto div = oracles::divisor_counts(n);
        CHECK(static_cast<int>(rows.size()) == 4 * div.d1);
        CHECK(squares == oracles::r2_brute(n));
    }
}
