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

#include "symdecomp/reduction.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "symdecomp/group.hpp"
#include "symdecomp/ordering.hpp"

namespace symdecomp {

monomial reduce(const monomial& m) {
    std::vector<std::uint64_t> values(m.exps());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::map<std::uint64_t, std::uint64_t> rank;
    for (std::size_t i = 0; i < values.size(); ++i)
        rank[values[i]] = i;
    std::vector<std::uint64_t> out(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        out[i] = rank[m.exps()[i]];
    return monomial(std::move(out));
}

bool is_reduced(const monomial& m) {
    return reduce(m) == m;
}

std::vector<monomial> reduce_set(const std::vector<monomial>& xs) {
    if (xs.empty())
        return {};
    const orbit_class cls = canonical(xs.front());
    for (const monomial& x : xs)
        if (!(canonical(x) == cls))
            throw precondition_error("reduce_set: inputs do not lie in one orbit");
    std::vector<monomial> out;
    for (const monomial& x : xs)
        out.push_back(reduce(x));
    std::sort(out.begin(), out.end(), lex_greater{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

reduced_classification classify_reduced(const monomial& m) {
    if (!is_reduced(m))
        throw precondition_error("classify_reduced: monomial is not in reduced form");
    const permutation g = sort_permutation(m);
    const monomial sorted = canonical(m).canonical_form;
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i < m.n(); ++i)
        if (sorted.exps()[i - 1] > sorted.exps()[i])
            members.push_back(i);
    members.push_back(m.n());
    return reduced_classification{g, index_set(m.n(), std::move(members))};
}

}  // namespace symdecomp
