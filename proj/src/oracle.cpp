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

#include "symdecomp/oracle.hpp"

#include <algorithm>
#include <map>

#include "symdecomp/parser.hpp"
#include "symdecomp/rank.hpp"
#include "symdecomp/rng.hpp"

namespace symdecomp {

using boost::multiprecision::cpp_int;

namespace {

// Column order for the candidate matrix: orbit class descending, then lex
// descending within a class. Candidates are triangular in this order when
// the structure holds, which keeps the elimination near-linear; the rank is
// of course order-independent.
bool column_before(const monomial& a, const monomial& b) {
    const monomial ca = canonical(a).canonical_form;
    const monomial cb = canonical(b).canonical_form;
    const auto cmp = lex_compare(ca, cb);
    if (!std::is_eq(cmp))
        return std::is_gt(cmp);
    return std::is_gt(lex_compare(a, b));
}

}  // namespace

graded_report graded_basis_check(std::size_t n, std::uint64_t degree,
                                 const generator_table<integer_domain>& generators) {
    if (n < 1)
        throw argument_error("graded_basis_check: n must be at least 1");

    graded_report report;
    report.n = n;
    report.degree = degree;
    report.expected_dim = graded_dimension(n, degree);
    if (report.expected_dim > graded_check_capacity)
        throw capacity_error("graded_basis_check: dim S_degree exceeds capacity cap");

    generator_table<integer_domain> table = generators;

    // Candidate polynomials with degree-matching r over every index set.
    std::vector<std::pair<std::string, int_polynomial>> candidates;
    for (const index_set& iset : all_index_sets(n)) {
        auto spec = detail::spec_for<integer_domain>(table, iset);
        if (!spec->generator.is_homogeneous() ||
            spec->generator.degree() != spec->leading.degree())
            throw argument_error(
                "graded_basis_check: generators must be homogeneous of the leading degree");
        const std::uint64_t base_degree = spec->leading.degree();
        if (base_degree > degree)
            continue;
        std::vector<int_polynomial> basis;
        basis.reserve(spec->reps.size());
        for (const permutation& rep : spec->reps)
            basis.push_back(apply_poly(rep, spec->generator));
        for (const d_monomial& r : enumerate_d_monomials(iset, degree - base_degree)) {
            const int_polynomial expanded = dmonomial_expand<integer_domain>(r);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                std::string label =
                    "I=" + iset.to_string() + " r=" + r.to_string() + " rep=" + std::to_string(j);
                candidates.emplace_back(std::move(label), expanded * basis[j]);
            }
        }
    }
    report.candidate_count = candidates.size();

    std::vector<monomial> basis_monomials = monomial_basis(n, degree);
    std::sort(basis_monomials.begin(), basis_monomials.end(), column_before);
    std::map<monomial, std::size_t, lex_greater> column;
    for (std::size_t j = 0; j < basis_monomials.size(); ++j)
        column.emplace(basis_monomials[j], j);

    int_matrix matrix;
    matrix.reserve(candidates.size());
    for (const auto& [label, poly] : candidates) {
        std::vector<cpp_int> row(basis_monomials.size(), 0);
        for (const auto& [m, c] : poly.terms())
            row[column.at(m)] = c;
        matrix.push_back(std::move(row));
    }

    report.rank = fraction_free_rank(matrix);

    const bool count_ok = cpp_int(report.candidate_count) == report.expected_dim;
    const bool rank_ok = cpp_int(report.rank) == report.expected_dim;
    report.pass = count_ok && rank_ok;
    if (!count_ok) {
        report.failure_kind = "count_mismatch";
    } else if (!rank_ok) {
        report.failure_kind = "rank_deficient";
        if (auto combo = dependent_combination(matrix)) {
            for (std::size_t i = 0; i < combo->size(); ++i)
                if (!(*combo)[i].is_zero())
                    report.witness.emplace_back(candidates[i].first, (*combo)[i].str());
        }
    }
    return report;
}

series_report hilbert_check(std::size_t n, std::uint64_t max_degree) {
    if (n < 1)
        throw argument_error("hilbert_check: n must be at least 1");
    series_report report;
    report.n = n;
    report.max_degree = max_degree;
    const std::size_t len = static_cast<std::size_t>(max_degree) + 1;

    report.lhs.assign(len, 0);
    for (const index_set& iset : all_index_sets(n)) {
        const std::uint64_t shift = e_prime(iset).degree();
        if (shift > max_degree)
            continue;
        std::vector<cpp_int> series(len, 0);
        series[shift] = module_dimension(iset);
        // Divide by (1 - t^i): a strided prefix sum.
        for (std::size_t i : iset.members())
            for (std::size_t j = i; j < len; ++j)
                series[j] += series[j - i];
        for (std::size_t j = 0; j < len; ++j)
            report.lhs[j] += series[j];
    }

    report.rhs.assign(len, 0);
    for (std::size_t j = 0; j < len; ++j)
        report.rhs[j] = graded_dimension(n, j);

    for (std::size_t j = 0; j < len; ++j) {
        if (report.lhs[j] != report.rhs[j]) {
            report.first_mismatch = j;
            break;
        }
    }
    report.pass = !report.first_mismatch.has_value();
    return report;
}

audit_report dimension_audit(std::size_t n) {
    if (n < 1 || n > 8)
        throw argument_error("dimension_audit: n must lie in [1, 8]");
    audit_report report;
    report.n = n;
    report.pass = true;
    for (const index_set& iset : all_index_sets(n)) {
        audit_entry entry{iset, module_dimension(iset),
                          transversal_of(e_prime(iset)).reps.size(), false};
        entry.match = cpp_int(entry.formula_dim) == cpp_int(entry.transversal_length);
        report.pass = report.pass && entry.match;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

roundtrip_report roundtrip_suite(std::size_t n, std::uint64_t max_degree, std::size_t trials,
                                 std::uint64_t seed) {
    if (n < 1)
        throw argument_error("roundtrip_suite: n must be at least 1");
    roundtrip_report report;
    report.n = n;
    report.max_degree = max_degree;
    report.trials = trials;
    report.seed = seed;
    report.prng_name = prng::name;

    prng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const int_polynomial u = random_polynomial<integer_domain>(rng, n, max_degree);
        const int_decomposition dec = decompose(u);
        if (!(recompose(dec) == u))
            report.failures.push_back({trial, render_polynomial(u)});
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace symdecomp
