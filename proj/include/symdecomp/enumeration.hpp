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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "symdecomp/index_set.hpp"
#include "symdecomp/monomial.hpp"
#include "symdecomp/structure.hpp"

namespace symdecomp {

boost::multiprecision::cpp_int binomial(std::uint64_t a, std::uint64_t b);

/// dim S_degree = C(degree + n - 1, n - 1).
boost::multiprecision::cpp_int graded_dimension(std::size_t n, std::uint64_t degree);

/// Every monomial of total degree `degree` in n variables, lex-descending.
std::vector<monomial> monomial_basis(std::size_t n, std::uint64_t degree);

/// Every d_I-monomial r with degree_in_s(r) == degree, in ascending power
/// order over the members of I. Deterministic.
std::vector<d_monomial> enumerate_d_monomials(const index_set& iset, std::uint64_t degree);

std::uint64_t count_d_monomials(const index_set& iset, std::uint64_t degree);

}  // namespace symdecomp
