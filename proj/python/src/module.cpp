#include "twosq/oracles.hpp"
#include "twosq/suites.hpp"
#include "twosq/triple_product.hpp"
#include "twosq/walker.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace twosq;

namespace {

std::vector<int> elements(const OddSet& s) { return {s.begin(), s.end()}; }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Walks from factorizations of n to sums of two squares.";

    py::class_<Partition>(m, "Partition")
        .def(py::init([](const std::vector<int>& parts) { return Partition::from_parts(parts); }),
             py::arg("parts") = std::vector<int>{})
        .def_static("parse", [](const std::string& s) { return Partition::parse(s); })
        .def_property_readonly("parts", &Partition::expanded)
        .def("sum", &Partition::sum)
        .def("order", &Partition::order)
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
        .def(py::self == py::self);

    m.def("reciprocal_pair", &reciprocal_pair, py::arg("lam"), py::arg("mu"));
    m.def("reciprocal_pair_skip", &reciprocal_pair_skip, py::arg("lam"), py::arg("mu"), py::arg("skip"));
    m.def("sq_diff_den", &sq_diff_den, py::arg("lam"), py::arg("mu"));
    m.def("sq_diff_num", &sq_diff_num, py::arg("lam"), py::arg("mu"));
    m.def("euler_identity_pair", &euler_identity_pair, py::arg("lam"), py::arg("mu"));

    m.def(
        "triple_product_forward",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            auto img = triple_product::forward(OddSet(a), OddSet(b));
            return py::make_tuple(img.n, img.lambda);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "triple_product_reverse",
        [](int n, const Partition& lambda) {
            auto [a, b] = triple_product::reverse(n, lambda);
            return py::make_tuple(elements(a), elements(b));
        },
        py::arg("n"), py::arg("lam"));

    py::class_<SquarePair>(m, "SquarePair")
        .def(py::init<int, int>(), py::arg("m1"), py::arg("m2"))
        .def_readonly("m1", &SquarePair::m1)
        .def_readonly("m2", &SquarePair::m2)
        .def("norm", &SquarePair::norm)
        .def("__str__", &SquarePair::to_string)
        .def("__repr__", &SquarePair::to_string)
        .def(py::self == py::self)
        .def("__hash__", [](const SquarePair& p) { return py::hash(py::make_tuple(p.m1, p.m2)); });

    py::class_<FactorWitness>(m, "FactorWitness")
        .def(py::init([](int d, int big_n, int eps1, int eps2) { return FactorWitness{d, big_n, eps1, eps2}; }),
             py::arg("d"), py::arg("N"), py::arg("eps1"), py::arg("eps2"))
        .def_readonly("d", &FactorWitness::d)
        .def_readonly("N", &FactorWitness::big_n)
        .def_readonly("eps1", &FactorWitness::eps1)
        .def_readonly("eps2", &FactorWitness::eps2)
        .def_property_readonly("n", &FactorWitness::n)
        .def("__str__", &FactorWitness::to_string)
        .def("__repr__", &FactorWitness::to_string)
        .def(py::self == py::self)
        .def("__hash__",
             [](const FactorWitness& w) { return py::hash(py::make_tuple(w.d, w.big_n, w.eps1, w.eps2)); });

    py::class_<WalkResult>(m, "WalkResult")
        .def_readonly("start", &WalkResult::start)
        .def_readonly("endpoint", &WalkResult::endpoint)
        .def_readonly("edge_pairs", &WalkResult::edge_pairs)
        .def_readonly("word", &WalkResult::word)
        .def_readonly("h_count", &WalkResult::h_count)
        .def_readonly("t_count", &WalkResult::t_count)
        .def_readonly("o_count", &WalkResult::o_count)
        .def_property_readonly("trace", [](const WalkResult& r) {
            py::list out;
            for (const auto& s : r.trace) out.append(py::make_tuple(std::string(1, static_cast<char>(s.matching)), s.vertex));
            return out;
        });

    py::register_exception<WalkError>(m, "WalkError", PyExc_RuntimeError);

    m.def(
        "walk",
        [](const FactorWitness& w, bool trace, bool check_cycles) {
            WalkOptions opts;
            opts.record_trace = trace;
            if (check_cycles) opts.cycle_check = CycleCheck::visited_set;
            return walk(w, opts);
        },
        py::arg("witness"), py::arg("trace") = false, py::arg("check_cycles") = false);
    m.def(
        "jacobi_table", [](int n) { return jacobi_table(n); }, py::arg("n"));
    m.def("encode_start", [](const FactorWitness& w) { return encode_start(w).to_string(); });
    m.def("factors_1mod4", &factors_1mod4);
    m.def("factors_3mod4", &factors_3mod4);
    m.def("square_pairs", &square_pairs);

    m.def("r2_brute", &oracles::r2_brute);
    m.def("divisor_counts", [](long long n) {
        auto p = oracles::divisor_counts(n);
        return py::make_tuple(p.d1, p.d3);
    });

    py::class_<suites::SuiteReport>(m, "SuiteReport")
        .def_readonly("name", &suites::SuiteReport::name)
        .def_readonly("checked", &suites::SuiteReport::checked)
        .def_readonly("matched", &suites::SuiteReport::matched)
        .def_readonly("residuals", &suites::SuiteReport::residuals)
        .def_readonly("ok", &suites::SuiteReport::ok)
        .def_readonly("counterexample", &suites::SuiteReport::counterexample);

    m.def("partition_suites", &suites::partition_suites, py::arg("max_sum"));
    m.def(
        "lemma_suites", [](int k) { return suites::lemma_suites(k); }, py::arg("max_q_half"));
    m.def("triple_product_suites", &suites::triple_product_suites, py::arg("max_sum"));
    m.def(
        "verify",
        [](int max_n) {
            py::list out;
            for (const auto& r : suites::verify_range(max_n)) {
                py::dict row;
                row["n"] = r.n;
                row["walks"] = r.walks;
                row["r2"] = r.r2;
                row["d1"] = r.divisors.d1;
                row["d3"] = r.divisors.d3;
                row["ok"] = r.ok;
                row["error"] = r.error;
                out.append(row);
            }
            return out;
        },
        py::arg("max_n"));
}
