#pragma once

#include "twosq/matchings.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twosq {

enum class Matching : char { J = 'J', H = 'H', T = 'T', O = 'O' };

struct TraceStep {
    Matching matching;
    std::string vertex; // serialized vertex reached by this edge
    bool operator==(const TraceStep&) const = default;
};

enum class CycleCheck { none, brent, visited_set };

struct WalkOptions {
    bool record_trace = false;
    // Keeps the full matching word; counts are always kept.
    bool record_word = true;
    // visited_set keeps every vertex and fails on any repeat. brent compares
    // the state after each edge pair with a checkpoint saved at powers of
    // two; with sign alternation on every edge this also rules out repeats,
    // in constant memory.
    CycleCheck cycle_check = CycleCheck::brent;
    // Checks q_half conservation and sign alternation on every edge.
    bool check_weights = true;
    std::uint64_t max_edge_pairs = 1'000'000'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    // Called for every edge with the 1-based step number and the vertex
    // reached; lets callers stream traces without holding them.
    std::function<void(std::uint64_t, Matching, const FullVertex&)> observer;
};

struct WalkResult {
    FactorWitness start;
    Endpoint endpoint;
    std::uint64_t edge_pairs = 0;
    // Local matchings in path order, one letter per edge pair.
    std::string word;
    std::uint64_t h_count = 0;
    std::uint64_t t_count = 0;
    std::uint64_t o_count = 0;
    std::vector<TraceStep> trace;
    bool operator==(const WalkResult&) const = default;
};

struct WalkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The walk ran past WalkOptions::deadline before reaching a residual.
struct WalkTimeout : WalkError {
    using WalkError::WalkError;
};

FullVertex encode_start(const FactorWitness& w);

// Follows J, then the local matching (H, T or O) chosen by the class and
// mark of the current vertex, until a local matching reports a residual.
WalkResult walk(const FactorWitness& w, const WalkOptions& opts = {});

// All 1-mod-4 witnesses of n in table order (d descending, then bits).
std::vector<FactorWitness> factors_1mod4(int n);
std::vector<FactorWitness> factors_3mod4(int n);
std::vector<SquarePair> square_pairs(int n);

// Empty when the endpoints of rows are exactly SquarePairs(n) and
// Factors3mod4(n), each hit once; otherwise a description of the mismatch.
std::string endpoint_mismatch(int n, const std::vector<WalkResult>& rows);

// Walks every 1-mod-4 witness of n and checks that the endpoints are
// exactly SquarePairs(n) and Factors3mod4(n), each hit once.
std::vector<WalkResult> jacobi_table(int n, const WalkOptions& opts = {});

// "T,O,T,O" for words up to max_letters long, per-letter counts
// ("H=12;T=40;O=33") beyond that.
std::string word_summary(const std::string& word, std::size_t max_letters = 12);

} // namespace twosq
