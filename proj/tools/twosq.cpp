#include "twosq/suites.hpp"
#include "twosq/walker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace twosq;

namespace {

enum class Format { table, csv, json };

struct Output {
    Format format = Format::table;
    std::string out_path;
};

// Rows of string cells, rendered as an aligned table, CSV or a JSON array.
// Cells listed in `numeric` are emitted as JSON numbers.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<bool> numeric;

    void render(std::ostream& os, Format f) const
    {
        switch (f) {
        case Format::csv:
            write_csv_row(os, header);
            for (const auto& r : rows) write_csv_row(os, r);
            break;
        case Format::json: {
            json arr = json::array();
            for (const auto& r : rows) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) {
                    if (numeric[i])
                        obj[header[i]] = json::parse(r[i]);
                    else
                        obj[header[i]] = r[i];
                }
                arr.push_back(obj);
            }
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::table: {
            std::vector<std::size_t> width(header.size());
            for (std::size_t i = 0; i < header.size(); ++i) {
                width[i] = header[i].size();
                for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
            }
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i) os << "  ";
                    if (numeric[i])
                        os << std::setw(static_cast<int>(width[i])) << cells[i];
                    else
                        os << std::left << std::setw(static_cast<int>(width[i])) << cells[i] << std::right;
                }
                os << "\n";
            };
            line(header);
            for (const auto& r : rows) line(r);
            break;
        }
        }
    }

    static void write_csv_row(std::ostream& os, const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            const std::string& c = cells[i];
            if (c.find_first_of(",\"\n") == std::string::npos) {
                os << c;
            } else {
                os << '"';
                for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
                os << '"';
            }
        }
        os << "\n";
    }
};

void emit(const Table& t, const Output& out)
{
    if (out.out_path.empty()) {
        t.render(std::cout, out.format);
        return;
    }
    std::ofstream f(out.out_path);
    if (!f) throw std::runtime_error("cannot write " + out.out_path);
    t.render(f, out.format);
}

std::string suite_status(bool ok) { return ok ? "pass" : "FAIL"; }

int cmd_walk(int n, const std::string& trace_path, bool check_cycles, const Output& out)
{
    WalkOptions opts;
    opts.record_word = true;
    if (check_cycles) opts.cycle_check = CycleCheck::visited_set;

    std::unique_ptr<std::ofstream> trace;
    std::string current;
    if (!trace_path.empty()) {
        trace = std::make_unique<std::ofstream>(trace_path);
        if (!*trace) throw std::runtime_error("cannot write " + trace_path);
        opts.observer = [&](std::uint64_t step, Matching m, const FullVertex& v) {
            json rec;
            rec["start"] = current;
            rec["step"] = step;
            rec["matching"] = std::string(1, static_cast<char>(m));
            rec["vertex"] = v.to_string();
            *trace << rec.dump() << "\n";
        };
    }

    std::vector<WalkResult> results;
    bool failed = false;
    for (const auto& w : factors_1mod4(n)) {
        current = w.to_string();
        if (!trace) std::cerr << "walking " << current << "\n";
        try {
            results.push_back(walk(w, opts));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            failed = true;
        }
    }

    Table t{{"start", "end", "edge_pairs", "word"}, {}, {false, false, true, false}};
    for (const auto& r : results)
        t.rows.push_back({r.start.to_string(), to_string(r.endpoint), std::to_string(r.edge_pairs),
                          word_summary(r.word)});
    emit(t, out);

    if (!failed) {
        if (auto err = endpoint_mismatch(n, results); !err.empty()) {
            std::cerr << "error: " << err << "\n";
            failed = true;
        }
    }
    return failed ? 1 : 0;
}

int cmd_verify(int max_n, double budget, bool check_cycles, const Output& out)
{
    WalkOptions opts;
    opts.record_word = false;
    if (check_cycles) opts.cycle_check = CycleCheck::visited_set;
    const auto t0 = std::chrono::steady_clock::now();
    if (budget > 0)
        opts.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(budget));

    auto rows = suites::verify_range(max_n, opts, [](const suites::VerifyRow& r) {
        std::cerr << "n=" << r.n << " " << (r.ok ? "pass" : r.timed_out ? "timeout" : "FAIL") << " (" << std::fixed
                  << std::setprecision(2) << r.seconds << "s)\n";
    });

    Table t{{"n", "walks", "r2", "d1", "d3", "square_ends", "witness_ends", "edge_pairs_max", "status"},
            {},
            {true, true, true, true, true, true, true, true, false}};
    std::vector<int> failing;
    for (const auto& r : rows) {
        const std::string status = r.ok ? "pass" : r.timed_out ? "timeout" : "FAIL";
        t.rows.push_back({std::to_string(r.n), std::to_string(r.walks), std::to_string(r.r2),
                          std::to_string(r.divisors.d1), std::to_string(r.divisors.d3),
                          std::to_string(r.square_endpoints), std::to_string(r.witness_endpoints),
                          std::to_string(r.edge_pairs_max), status});
        if (!r.ok) failing.push_back(r.n);
    }
    emit(t, out);

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << std::fixed << std::setprecision(2) << "total " << total << "s\n";
    const int reached = rows.empty() ? 0 : rows.back().n;
    if (reached < max_n) {
        std::cerr << "stopped at n=" << reached << " of " << max_n << "\n";
        if (failing.empty() || failing.back() != reached) failing.push_back(reached);
    }
    if (failing.empty()) return 0;
    std::cerr << "failing n:";
    for (int n : failing) std::cerr << " " << n;
    std::cerr << "\n";
    for (const auto& r : rows)
        if (!r.error.empty()) std::cerr << "n=" << r.n << ": " << r.error << "\n";
    return 1;
}

int report_suites(const std::vector<suites::SuiteReport>& reports, const Output& out)
{
    Table t{{"suite", "checked", "matched", "residuals", "status", "counterexample"},
            {},
            {false, true, true, true, false, false}};
    bool ok = true;
    for (const auto& r : reports) {
        t.rows.push_back({r.name, std::to_string(r.checked), std::to_string(r.matched), std::to_string(r.residuals),
                          suite_status(r.ok), r.counterexample});
        ok = ok && r.ok;
    }
    emit(t, out);
    for (const auto& r : reports)
        if (!r.ok) std::cerr << r.name << ": " << r.counterexample << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Walks from factorizations of n to sums of two squares, with the checks behind them."};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", out.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", out.out_path, "Write the table here instead of standard output");

    int walk_n = 0;
    std::string trace_path;
    bool walk_cycles = false;
    auto* walk = app.add_subcommand("walk", "Walk every 1 mod 4 factorization witness of n");
    walk->add_option("n", walk_n, "The exponent n")->required()->check(CLI::Range(1, 1000000));
    walk->add_option("--trace", trace_path, "Write every edge as JSON lines {start, step, matching, vertex}");
    walk->add_flag("--check-cycles", walk_cycles, "Keep every visited vertex and fail on a repeat");

    int verify_max = 0;
    double budget = 0;
    bool verify_cycles = false;
    auto* verify = app.add_subcommand("verify", "Check the walk bijection and r2 = 4(d1 - d3) for n = 1..max");
    verify->add_option("--max", verify_max, "Largest n")->required()->check(CLI::Range(1, 1000000));
    verify->add_option("--budget", budget, "Stop once this many seconds have passed (0: no limit)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--check-cycles", verify_cycles, "Keep every visited vertex and fail on a repeat");

    int max_q_half = 0;
    int partition_sum = 12;
    auto* lemmas = app.add_subcommand("lemmas", "Exhaustive involution and residual checks of every matching");
    lemmas->add_option("--max-qhalf", max_q_half, "Largest weight exponent, in half units")
        ->required()
        ->check(CLI::Range(0, 18));
    lemmas->add_option("--partition-max-sum", partition_sum, "Bound for the partition pair operations")
        ->check(CLI::Range(0, 20));

    int max_sum = 0;
    auto* triple = app.add_subcommand("triple-product", "Round trip and coefficient counts of the triple product map");
    triple->add_option("--max-sum", max_sum, "Largest sum(A) + sum(B)")->required()->check(CLI::Range(0, 60));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*walk) return cmd_walk(walk_n, trace_path, walk_cycles, out);
        if (*verify) return cmd_verify(verify_max, budget, verify_cycles, out);
        if (*lemmas) {
            auto reports = suites::partition_suites(partition_sum);
            for (auto& r : suites::lemma_suites(max_q_half)) reports.push_back(std::move(r));
            return report_suites(reports, out);
        }
        if (*triple) return report_suites(suites::triple_product_suites(max_sum), out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
