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

#pragma once

#include <vector>

#include "symdecomp/group.hpp"
#include "symdecomp/monomial.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

/// The orbit of a monomial under Sym(n), named by its lex-greatest element:
/// the exponent vector sorted in non-increasing order.
struct orbit_class {
    monomial canonical_form;

    bool operator==(const orbit_class& rhs) const = default;
};

/// Exponents sorted non-increasing; equals the lex maximum over the orbit.
orbit_class canonical(const monomial& m);

enum class succ_ordering { precedes, approx_equal, succeeds };

/// The orbit-maximal order: lex-compare the canonical forms. approx_equal
/// exactly when the exponent multisets coincide (same orbit).
succ_ordering succ_compare(const monomial& a, const monomial& b);

/// The monomials occurring in u with nonzero coefficient, lex-descending.
template <coefficient_domain D>
std::vector<monomial> support(const polynomial<D>& u) {
    std::vector<monomial> out;
    out.reserve(u.term_count());
    for (const auto& [m, c] : u.terms())
        out.push_back(m);
    return out;
}

/// All orbit-maximal elements of the support, lex-descending. Empty for the
/// zero polynomial. Every pair of returned monomials lies in one orbit.
template <coefficient_domain D>
std::vector<monomial> glm(const polynomial<D>& u) {
    std::vector<monomial> out;
    if (u.is_zero())
        return out;
    const orbit_class* best = nullptr;
    std::vector<orbit_class> classes;
    classes.reserve(u.term_count());
    for (const auto& [m, c] : u.terms())
        classes.push_back(canonical(m));
    for (const auto& cls : classes)
        if (best == nullptr || std::is_gt(lex_compare(cls.canonical_form, best->canonical_form)))
            best = &cls;
    std::size_t i = 0;
    for (const auto& [m, c] : u.terms()) {
        if (classes[i] == *best)
            out.push_back(m);  // term order is lex-descending already
        ++i;
    }
    return out;
}

}  // namespace symdecomp
