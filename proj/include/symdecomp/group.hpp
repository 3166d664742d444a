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

#include <cstdint>
#include <vector>

#include "symdecomp/monomial.hpp"
#include "symdecomp/permutation.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

/// k! for k <= 20 (the largest factorial fitting in 64 bits).
std::uint64_t factorial(std::size_t k);

/// Order of the stabilizer of m in Sym(n): the Young subgroup permuting
/// positions with equal exponents among themselves, so the order is the
/// product of factorials of the exponent-value multiplicities.
std::uint64_t stabilizer_order(const monomial& m);

/// Adjacent transpositions within each equal-exponent class; they generate
/// the stabilizer and each one fixes m.
std::vector<permutation> stabilizer_generators(const monomial& m);

/// All distinct images g.m, in lex-descending order. Computed from the
/// distinct arrangements of the exponent vector, never by enumerating Sym(n).
std::vector<monomial> orbit(const monomial& m);

/// Coset representatives of the stabilizer of base, one per orbit element.
/// reps[j] maps base to the j-th orbit element in lex-descending order and is
/// the lexicographically least image vector doing so.
struct transversal {
    monomial base;
    std::vector<permutation> reps;
};

transversal transversal_of(const monomial& m);

/// The stable-sort permutation g with g * sorted_descending(m) = m,
/// ties broken by ascending position.
permutation sort_permutation(const monomial& m);

/// The lexicographically least image vector g with g * base = target.
/// Precondition: base and target have equal exponent multisets.
permutation rep_permutation(const monomial& base, const monomial& target);

/// Term-wise action on polynomials; coefficients unchanged.
template <coefficient_domain D>
polynomial<D> apply_poly(const permutation& g, const polynomial<D>& u) {
    if (g.n() != u.n())
        throw dimension_error("apply_poly: permutation and polynomial degrees differ");
    polynomial<D> out(u.n());
    for (const auto& [m, c] : u.terms())
        out.add_term(apply(g, m), c);
    return out;
}

}  // namespace symdecomp
