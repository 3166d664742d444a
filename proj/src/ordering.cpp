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

#include "symdecomp/ordering.hpp"

#include <algorithm>
#include <functional>

namespace symdecomp {

orbit_class canonical(const monomial& m) {
    std::vector<std::uint64_t> v(m.exps());
    std::sort(v.begin(), v.end(), std::greater<>());
    return orbit_class{monomial(std::move(v))};
}

succ_ordering succ_compare(const monomial& a, const monomial& b) {
    if (a.n() != b.n())
        throw dimension_error("succ_compare: mismatched variable counts");
    const auto cmp = lex_compare(canonical(a).canonical_form, canonical(b).canonical_form);
    if (std::is_lt(cmp))
        return succ_ordering::precedes;
    if (std::is_gt(cmp))
        return succ_ordering::succeeds;
    return succ_ordering::approx_equal;
}

}  // namespace symdecomp
