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
#include <optional>
#include <vector>

namespace symdecomp {

using int_matrix = std::vector<std::vector<boost::multiprecision::cpp_int>>;

/// Exact rank by fraction-free (Bareiss) Gaussian elimination over the
/// integers. No tolerances anywhere; every division is checked to be exact.
std::size_t fraction_free_rank(int_matrix m);

/// A nonzero integer combination of the rows summing to zero, or nullopt when
/// the rows are linearly independent. Indices refer to the input row order.
std::optional<std::vector<boost::multiprecision::cpp_int>> dependent_combination(
    const int_matrix& m);

}  // namespace symdecomp
