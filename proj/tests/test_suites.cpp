#include "twosq/suites.hpp"

#include <doctest.h>

using namespace twosq;
using namespace twosq::suites;

TEST_CASE("lemma suites pass at q_half 0")
{
    for (const auto& r : lemma_suites(0)) {
        INFO(r.name);
        CHECK(r.ok);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("a corrupted J is caught")
{
    Matchings bad;
    bad.j_g = [](const GVertex& v) {
        GVertex w = j_match(v);
        if (w.cls == 1 && w.a.size() == 1) w.cls = 2;
        return w;
    };
    const auto r = j_suite_g(8, bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("a corrupted T is caught")
{
    Matchings bad;
    bad.t = [](const FullVertex& v) -> MatchResult<SquarePair> {
        auto r = t_match(v);
        if (auto* sp = std::get_if<SquarePair>(&r)) return SquarePair{sp->m2, sp->m1 + 1};
        return r;
    };
    const auto r = t_suite(4, bad);
    CHECK_FALSE(r.ok);
}

TEST_CASE("a corrupted O is caught")
{
    Matchings bad;
    bad.o = [](const FullVertex& v) -> MatchResult<FactorWitness> {
        auto r = o_match(v);
        if (auto* p = std::get_if<FullVertex>(&r)) p->gamma[Slot::rho4].add(1);
        return r;
    };
    CHECK_FALSE(o_suite(6, bad).ok);
}

TEST_CASE("a corrupted H is caught")
{
    Matchings bad;
    bad.h = [](const FullVertex&) -> std::optional<FullVertex> { return std::nullopt; };
    CHECK_FALSE(h_suite(4, bad).ok);
}

TEST_CASE("verify range")
{
    const auto rows = verify_range(10);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        INFO(r.n << ": " << r.error);
        CHECK(r.ok);
    }
    CHECK(rows[8].walks == 8);
    CHECK(rows[8].witness_endpoints == 4);
    CHECK_THROWS(verify_range(0));
}

TEST_CASE("verify stops at the deadline")
{
    WalkOptions opts;
    opts.deadline = std::chrono::steady_clock::now();
    const auto rows = verify_range(40, opts);
    REQUIRE_FALSE(rows.empty());
    CHECK(rows.size() < 40);
    CHECK(rows.back().timed_out);
    CHECK_FALSE(rows.back().ok);
}
