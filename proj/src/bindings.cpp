/*
   Copyright 2026 The symdecomp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symdecomp/decompose.hpp"
#include "symdecomp/json_io.hpp"
#include "symdecomp/oracle.hpp"
#include "symdecomp/parser.hpp"
#include "symdecomp/reduction.hpp"

namespace py = pybind11;
using namespace symdecomp;

namespace {

std::string decomposition_human(const int_decomposition& dec) {
    // Mirrors the CLI's text rendering.
    if (dec.empty())
        return "0";
    std::string s;
    for (const auto& [iset, terms] : dec.components) {
        for (const auto& t : terms) {
            const int_polynomial expansion = t.elem.expand();
            bool all_negative = true;
            for (const auto& [m, c] : expansion.terms())
                all_negative = all_negative && c < 0;
            const int_polynomial shown = all_negative ? -expansion : expansion;
            std::string body = render_polynomial(shown);
            if (shown.term_count() > 1)
                body = "(" + body + ")";
            std::string piece = t.r.to_string() + " ⊗ " + body;
            if (s.empty())
                s = (all_negative ? "- " : "") + piece;
            else
                s += (all_negative ? " - " : " + ") + piece;
        }
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact decomposition of polynomials under the natural symmetric group action";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<dimension_error>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);

    py::class_<int_polynomial>(m, "Polynomial")
        .def_static(
            "from_text",
            [](const std::string& text, std::size_t n) {
                return parse_polynomial<integer_domain>(text, n);
            },
            py::arg("text"), py::arg("n"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return poly_from_json<integer_domain>(nlohmann::json::parse(text));
                    })
        .def_property_readonly("n", &int_polynomial::n)
        .def("is_zero", &int_polynomial::is_zero)
        .def("term_count", &int_polynomial::term_count)
        .def("degree", &int_polynomial::degree)
        .def("render", &render_polynomial<integer_domain>)
        .def("to_json", [](const int_polynomial& u) { return poly_to_json(u).dump(); })
        .def("__add__", [](const int_polynomial& a, const int_polynomial& b) { return a + b; })
        .def("__sub__", [](const int_polynomial& a, const int_polynomial& b) { return a - b; })
        .def("__mul__", [](const int_polynomial& a, const int_polynomial& b) { return a * b; })
        .def("__neg__", [](const int_polynomial& a) { return -a; })
        .def("__eq__", [](const int_polynomial& a, const int_polynomial& b) { return a == b; })
        .def("__repr__", [](const int_polynomial& u) {
            return "Polynomial(" + render_polynomial(u) + ")";
        });

    py::class_<int_decomposition>(m, "Decomposition")
        .def_property_readonly("n", [](const int_decomposition& d) { return d.n; })
        .def("empty", &int_decomposition::empty)
        .def("term_count", &int_decomposition::term_count)
        .def("recompose", [](const int_decomposition& d) { return recompose(d); })
        .def("render", &decomposition_human)
        .def("to_json",
             [](const int_decomposition& d) { return decomposition_to_json(d).dump(); })
        .def("__eq__", [](const int_decomposition& a, const int_decomposition& b) {
            return a == b;
        });

    m.def(
        "decompose", [](const int_polynomial& u) { return decompose(u); }, py::arg("poly"),
        "Unique expression of a polynomial as d-monomials times module elements");
    m.def("decomposition_from_json", [](const std::string& text) {
        return decomposition_from_json<integer_domain>(nlohmann::json::parse(text));
    });

    m.def("elementary_symmetric", [](std::size_t n, std::size_t i) {
        return elementary_symmetric<integer_domain>(n, i);
    });

    m.def(
        "glm",
        [](const int_polynomial& u) {
            std::vector<std::vector<std::uint64_t>> out;
            for (const monomial& g : glm(u))
                out.push_back(g.exps());
            return out;
        },
        "Exponent vectors of the orbit-maximal monomials, lex-descending");

    m.def("canonical", [](const std::vector<std::uint64_t>& exps) {
        return canonical(monomial(exps)).canonical_form.exps();
    });

    m.def("reduce", [](const std::vector<std::uint64_t>& exps) {
        return reduce(monomial(exps)).exps();
    });

    m.def(
        "classify_reduced",
        [](const std::vector<std::uint64_t>& exps) {
            const reduced_classification cls = classify_reduced(monomial(exps));
            return py::make_tuple(cls.g.images(), cls.iset.members());
        },
        "Pair (g images, index set members) with g applied to the staircase monomial "
        "giving the input");

    m.def("module_table_json", [](std::size_t n) {
        nlohmann::json rows = nlohmann::json::array();
        for (const index_set& iset : all_index_sets(n)) {
            const monomial e = e_prime(iset);
            rows.push_back({{"I", iset.members()},
                            {"e_prime", render_monomial(e)},
                            {"dim", module_dimension(iset)},
                            {"stabilizer_order", stabilizer_order(e)},
                            {"transversal", transversal_of(e).reps.size()}});
        }
        return nlohmann::json{{"n", n}, {"modules", rows}}.dump();
    });

    m.def("graded_basis_check_json", [](std::size_t n, std::uint64_t degree) {
        return graded_report_to_json(graded_basis_check(n, degree)).dump();
    });
    m.def("hilbert_check_json", [](std::size_t n, std::uint64_t max_degree) {
        return series_report_to_json(hilbert_check(n, max_degree)).dump();
    });
    m.def("dimension_audit_json", [](std::size_t n) {
        return audit_report_to_json(dimension_audit(n)).dump();
    });
    m.def("roundtrip_suite_json",
          [](std::size_t n, std::uint64_t max_degree, std::size_t trials, std::uint64_t seed) {
              return roundtrip_report_to_json(roundtrip_suite(n, max_degree, trials, seed))
                  .dump();
          });

    m.attr("__version__") = "0.1.0";
}
