#pragma once

#include "twosq/graph.hpp"
#include "twosq/matchings.hpp"
#include "twosq/oracles.hpp"
#include "twosq/walker.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Exhaustive checks shared by the CLI, the test binaries and the python
// module.
namespace twosq::suites {

struct SuiteReport {
    std::string name;
    long long checked = 0;   // vertices (or inputs) examined
    long long matched = 0;   // of those, the ones with a partner
    long long residuals = 0; // of those, the unmatched ones
    bool ok = true;
    std::string counterexample; // first failure, empty when ok
};

// The matchings under test. Defaults are the library's; tests swap one out
// for a corrupted copy to see the suite catch it.
struct Matchings {
    std::function<GVertex(const GVertex&)> j_g = [](const GVertex& v) { return j_match(v); };
    std::function<MarkedVertex(const MarkedVertex&)> j_marked = [](const MarkedVertex& v) { return j_match(v); };
    std::function<FullVertex(const FullVertex&)> j_full = [](const FullVertex& v) { return j_match(v); };
    std::function<std::optional<FullVertex>(const FullVertex&)> h = [](const FullVertex& v) { return h_match(v); };
    std::function<MatchResult<SquarePair>(const FullVertex&)> t = [](const FullVertex& v) { return t_match(v); };
    std::function<MatchResult<FactorWitness>(const FullVertex&)> o = [](const FullVertex& v) { return o_match(v); };
};

// Involution, conservation and residual checks for the pair operations
// over all partition pairs of combined sum <= max_sum.
std::vector<SuiteReport> partition_suites(int max_sum);

SuiteReport j_suite_g(int max_q_half, const Matchings& m = {});
SuiteReport j_suite_marked(int max_q_half, const Matchings& m = {});
SuiteReport j_suite_full(int max_q_half, const Matchings& m = {});
SuiteReport h_suite(int max_q_half, const Matchings& m = {});
// T and O also check the residual sets against r2 and the divisor oracle
// for every n with 2n <= max_q_half.
SuiteReport t_suite(int max_q_half, const Matchings& m = {});
SuiteReport o_suite(int max_q_half, const Matchings& m = {});

// All of the above at one bound (the J suites at every level).
std::vector<SuiteReport> lemma_suites(int max_q_half, const Matchings& m = {});

// Round trip, weight conservation and coefficient-count identity of the
// triple-product bijection over all (A, B) with sum(A) + sum(B) <= max_sum.
std::vector<SuiteReport> triple_product_suites(int max_sum);

struct VerifyRow {
    int n = 0;
    int walks = 0;
    long long r2 = 0;
    oracles::DivisorProfile divisors;
    int square_endpoints = 0;
    int witness_endpoints = 0;
    std::uint64_t edge_pairs_total = 0;
    std::uint64_t edge_pairs_max = 0;
    double seconds = 0;
    bool ok = false;
    bool timed_out = false;
    std::string error;
};

// Walks every n in [1, max_n] and checks the walk bijection and
// r2(n) = 4(d1(n) - d3(n)) against the oracles. Stops after the first n
// that times out.
std::vector<VerifyRow> verify_range(int max_n, const WalkOptions& opts = {},
                                    const std::function<void(const VerifyRow&)>& progress = {});

} // namespace twosq::suites
