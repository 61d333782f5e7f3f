// One line per acceptance criterion: "criterion <k> PASS|FAIL: <detail>".
#include "twosq/suites.hpp"
#include "twosq/walker.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

using namespace twosq;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
    bool pass = false;
    std::string detail;
};

std::string fixed2(double x)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << x;
    return os.str();
}

bool print(int k, const Line& l)
{
    std::cout << "criterion " << k << " " << (l.pass ? "PASS" : "FAIL") << ": " << l.detail << std::endl;
    return l.pass;
}

// Walk safety bookkeeping for criterion 7: every walk runs with the weight
// check on each edge; any WalkError other than a timeout is a violation.
struct Safety {
    long long walks = 0;
    long long edge_pairs = 0;
    long long violations = 0;
    std::string first;

    void note(const WalkResult& r)
    {
        ++walks;
        edge_pairs += static_cast<long long>(r.edge_pairs);
    }
    void violation(const std::string& what)
    {
        if (violations++ == 0) first = what;
    }
};

std::vector<WalkResult> safe_table(int n, const WalkOptions& opts, Safety& safety, std::string& error)
{
    std::vector<WalkResult> rows;
    for (const auto& w : factors_1mod4(n)) {
        try {
            rows.push_back(walk(w, opts));
            safety.note(rows.back());
        } catch (const WalkTimeout&) {
            throw;
        } catch (const std::exception& e) {
            safety.violation(e.what());
            error = e.what();
        }
    }
    return rows;
}

} // namespace

int main()
{
    bool all = true;
    Safety safety;
    WalkOptions exact;
    exact.cycle_check = CycleCheck::visited_set;

    // 1. Table for n = 1.
    {
        const auto t0 = Clock::now();
        std::string err;
        const auto rows = safe_table(1, exact, safety, err);
        const double secs = since(t0);
        const std::vector<std::string> starts = {"(1,1;1,1,-)", "(1,1;1,2,-)", "(1,1;2,1,+)", "(1,1;2,2,+)"};
        const std::vector<std::string> ends = {"(-1,0)", "(0,-1)", "(0,1)", "(1,0)"};
        const std::vector<std::string> words = {"TOTO", "HTOT", "OTO", "HTOTO"};
        Line l;
        l.pass = err.empty() && rows.size() == 4 && secs < 1.0;
        std::string mism;
        for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
            const bool ok = rows[i].start.to_string() == starts[i] && to_string(rows[i].endpoint) == ends[i] &&
                            rows[i].word == words[i];
            if (!ok) {
                l.pass = false;
                mism += " " + rows[i].start.to_string() + "->" + to_string(rows[i].endpoint) + " word " +
                        word_summary(rows[i].word) + " (expected " + ends[i] + " " + word_summary(words[i]) + ");";
            }
        }
        l.detail = (l.pass ? "4 rows exact" : "mismatch:" + mism + err) + ", " + fixed2(secs) + "s";
        all &= print(1, l);
    }

    // 2 and 3. n = 9.
    std::vector<WalkResult> nine;
    bool endpoints_exact = false;
    {
        const auto t0 = Clock::now();
        std::string err;
        nine = safe_table(9, exact, safety, err);
        const double secs = since(t0);
        std::vector<Endpoint> got, want = {SquarePair{0, 3},         SquarePair{0, -3},        SquarePair{-3, 0},
                                           SquarePair{3, 0},         FactorWitness{3, 3, 0, 0}, FactorWitness{3, 3, 0, 1},
                                           FactorWitness{3, 3, 1, 0}, FactorWitness{3, 3, 1, 1}};
        for (const auto& r : nine) got.push_back(r.endpoint);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        endpoints_exact = err.empty() && got == want;
        Line l;
        l.pass = endpoints_exact && secs < 60.0;
        l.detail = std::string(endpoints_exact ? "endpoint multiset exact" : "endpoint multiset differs " + err) +
                   " over " + std::to_string(nine.size()) + " walks, " + fixed2(secs) + "s";
        all &= print(2, l);
    }

    // 5 and 6 run before 3 so that option (b) can see the invariant suites.
    Line five;
    {
        const auto t0 = Clock::now();
        five.pass = true;
        long long checked = 0;
        for (const auto& r : suites::triple_product_suites(40)) {
            checked += r.checked;
            if (!r.ok) {
                five.pass = false;
                five.detail += r.name + ": " + r.counterexample + "; ";
            }
        }
        five.detail += std::to_string(checked) + " checks up to sum 40, " + fixed2(since(t0)) + "s";
    }
    Line six;
    {
        const auto t0 = Clock::now();
        six.pass = true;
        auto reports = suites::partition_suites(12);
        for (auto& r : suites::lemma_suites(16)) reports.push_back(std::move(r));
        long long checked = 0;
        for (const auto& r : reports) {
            checked += r.checked;
            if (!r.ok) {
                six.pass = false;
                six.detail += r.name + ": " + r.counterexample + "; ";
            }
        }
        six.detail += std::to_string(reports.size()) + " suites, " + std::to_string(checked) +
                      " vertices and pairs at q_half <= 16, " + fixed2(since(t0)) + "s";
    }

    {
        const std::vector<std::pair<std::string, std::uint64_t>> table = {
            {"(9,1;1,5,-)", 1107},  {"(9,1;1,6,-)", 6614},  {"(9,1;2,5,+)", 20638},   {"(9,1;2,6,+)", 15088},
            {"(1,9;1,1,-)", 19038}, {"(1,9;1,2,-)", 80431}, {"(1,9;2,1,+)", 134951}, {"(1,9;2,2,+)", 15613}};
        int exact_counts = 0;
        std::string diffs;
        for (const auto& [start, count] : table)
            for (const auto& r : nine)
                if (r.start.to_string() == start) {
                    if (r.edge_pairs == count)
                        ++exact_counts;
                    else
                        diffs += " " + start + " " + std::to_string(r.edge_pairs) + " vs " + std::to_string(count) + ";";
                }
        Line l;
        const bool option_a = exact_counts == 8;
        const bool option_b = endpoints_exact && five.pass && six.pass;
        l.pass = option_a || option_b;
        l.detail = std::to_string(exact_counts) + "/8 counts exact";
        if (!option_a) l.detail += " (differ:" + diffs + ")";
        l.detail += option_a ? "" : option_b ? ", endpoints exact and invariant suites pass" : ", option (b) not met";
        all &= print(3, l);
    }

    // 4. Sweep n = 1..200 under a ten-minute budget.
    {
        const auto t0 = Clock::now();
        WalkOptions opts;
        opts.record_word = false;
        opts.deadline = t0 + std::chrono::minutes(10);
        int reached = 0, passed = 0;
        std::string why;
        bool timed_out = false;
        try {
            for (int n = 1; n <= 200; ++n) {
                std::string err;
                const auto rows = safe_table(n, opts, safety, err);
                if (err.empty()) err = endpoint_mismatch(n, rows);
                const auto div = oracles::divisor_counts(n);
                long long squares = 0;
                for (const auto& r : rows) squares += std::holds_alternative<SquarePair>(r.endpoint);
                const bool ok = err.empty() && static_cast<int>(rows.size()) == 4 * div.d1 &&
                                squares == oracles::r2_brute(n) && squares == 4LL * (div.d1 - div.d3);
                reached = n;
                if (ok)
                    ++passed;
                else if (why.empty())
                    why = "n=" + std::to_string(n) + ": " + (err.empty() ? "count mismatch" : err);
            }
        } catch (const WalkTimeout& e) {
            timed_out = true;
            why = e.what();
        }
        Line l;
        l.pass = !timed_out && reached == 200 && passed == 200;
        l.detail = std::to_string(passed) + " of 200 n verified in " + fixed2(since(t0)) + "s";
        if (!why.empty()) l.detail += "; stopped: " + why;
        all &= print(4, l);
    }

    all &= print(5, five);
    all &= print(6, six);

    {
        Line l;
        l.pass = safety.violations == 0;
        l.detail = std::to_string(safety.violations) + " violations over " + std::to_string(safety.walks) +
                   " completed walks (" + std::to_string(safety.edge_pairs) +
                   " edge pairs; weights checked on every edge, repeats by visited set for n = 1, 9 and by "
                   "checkpoint comparison elsewhere)";
        if (!l.pass) l.detail += "; first: " + safety.first;
        all &= print(7, l);
    }
    return all ? 0 : 1;
}
