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

#include "symdecomp/index_set.hpp"
#include "symdecomp/monomial.hpp"
#include "symdecomp/permutation.hpp"

namespace symdecomp {

/// Rank compression of the exponent vector: each exponent is replaced by the
/// number of distinct exponent values strictly below it, so the distinct
/// values of the result are {0..a-1}, order preserved. Idempotent.
monomial reduce(const monomial& m);

bool is_reduced(const monomial& m);

/// Element-wise reduce of a set of monomials that all lie in one orbit.
/// Throws precondition_error when the inputs are not pairwise in one orbit.
/// Duplicates in the image are collapsed; output is lex-descending.
std::vector<monomial> reduce_set(const std::vector<monomial>& xs);

/// Witness that a reduced monomial m equals g applied to the staircase
/// monomial of the index set: apply(g, e_prime(iset)) == m.
struct reduced_classification {
    permutation g;
    index_set iset;
};

/// Classification of a reduced monomial: sort the exponents descending with
/// the stable-sort permutation, read the descent positions i1 < ... < ia
/// (where the sorted exponents strictly drop), and return
/// I = {i1..ia} ∪ {n}. Throws precondition_error when m is not reduced.
reduced_classification classify_reduced(const monomial& m);

}  // namespace symdecomp
