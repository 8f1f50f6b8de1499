#include "bch/coefficients.hpp"
#include "bch/denominators.hpp"
#include "bch/errors.hpp"
#include "bch/lietools.hpp"
#include "bch/oracle.hpp"
#include "bch/tabulation.hpp"
#include "bch/word.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

py::object py_int(const bch::Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object py_fraction(const bch::Rational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_int(q.get_num()), py_int(q.get_den()));
}

bch::CoeffOptions options_for(const std::string& backend) {
    return {bch::backend_from_name(backend), bch::CheckMode::Checked, 1};
}

} // namespace

PYBIND11_MODULE(_bchcoeffs, m) {
    m.doc() = "Exact coefficients of the series log(exp(A) exp(B))";

    m.attr("MAX_DEGREE_FIXED64") = bch::max_degree_fixed64;
    m.attr("MAX_DEGREE_FIXED128") = bch::max_degree_fixed128;
    m.attr("ORACLE_MAX_DEGREE") = bch::oracle_max_degree;

    py::register_exception<bch::InvalidWord>(m, "InvalidWord", PyExc_ValueError);
    py::register_exception<bch::OracleRangeExceeded>(m, "OracleRangeExceeded", PyExc_ValueError);
    py::register_exception<bch::BackendOverflow>(m, "BackendOverflow", PyExc_OverflowError);
    py::register_exception<bch::InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);

    m.def("digit_sum", &bch::digit_sum, py::arg("n"), py::arg("p"),
          "Sum of the base-p digits of n.");

    m.def(
        "compute_dn", [](int n) { return py_int(bch::compute_dn(n)); }, py::arg("n"),
        "Correction factor d_n; n! * d_n is the smallest common denominator of degree n.");

    m.def(
        "common_denominator", [](int n) { return py_int(bch::common_denominator(n)); },
        py::arg("n"), "n! * d_n.");

    m.def(
        "coefficient",
        [](const std::string& word, const std::string& backend) {
            return py_fraction(bch::bch_coefficient(word, options_for(backend)));
        },
        py::arg("word"), py::arg("backend") = "auto",
        "Coefficient of a word in log(exp(A) exp(B)), as a Fraction.");

    m.def(
        "coefficient_blocks",
        [](std::vector<int> blocks, bool a_first, const std::string& backend) {
            const bch::BlockWord w{std::move(blocks), a_first};
            return py_fraction(bch::bch_coefficient(w, options_for(backend)));
        },
        py::arg("blocks"), py::arg("a_first") = true, py::arg("backend") = "auto",
        "Coefficient of the word given by block lengths.");

    m.def(
        "oracle_coefficient",
        [](const std::string& word) { return py_fraction(bch::oracle_coefficient(word)); },
        py::arg("word"), "Brute-force coefficient, independent of the recursion.");

    m.def(
        "partitions_up_to",
        [](int max_degree) {
            std::vector<std::vector<int>> out;
            for (const bch::Partition& p : bch::partitions_up_to(max_degree))
                out.push_back(p.parts);
            return out;
        },
        py::arg("max_degree"), "All partitions of 1..max_degree in table order.");

    m.def(
        "coefficient_table",
        [](int max_degree, const std::string& backend, int threads) {
            const bch::TableOptions opt{bch::backend_from_name(backend),
                                        bch::CheckMode::Checked, threads};
            const bch::CoeffTable table = bch::coefficient_table(max_degree, opt);
            py::list out;
            for (const bch::CoeffTableEntry& e : table.entries())
                out.append(py::make_tuple(e.partition.n, e.partition.parts,
                                          py_fraction(e.value)));
            return out;
        },
        py::arg("max_degree"), py::arg("backend") = "auto", py::arg("threads") = 1,
        "List of (n, parts, Fraction) in table order.");

    m.def(
        "coefficient_via_table",
        [](const std::string& word) {
            const int n = bch::parse_word(word).degree();
            const bch::CoeffTable table = bch::coefficient_table(n, {});
            return py_fraction(bch::coefficient_of_word_via_table(word, table));
        },
        py::arg("word"), "Coefficient through the partition table and its symmetries.");

    m.def(
        "dynkin_terms",
        [](int n, const std::string& backend) {
            py::list out;
            for (const bch::CommutatorTerm& t :
                 bch::dynkin_representation(n, options_for(backend)))
                out.append(py::make_tuple(t.word, py_fraction(t.coefficient)));
            return out;
        },
        py::arg("n"), py::arg("backend") = "auto",
        "Degree-n component as (word, Fraction) pairs naming nested commutators.");

    m.def(
        "verify_dynkin", [](int n) { return bch::verify_dynkin(n, {}); }, py::arg("n"),
        "True iff the Dynkin recombination reproduces the direct coefficients.");
}
