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

#include "symdecomp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace symdecomp {

std::uint64_t factorial(std::size_t k) {
    if (k > 20)
        throw argument_error("factorial: argument exceeds 64-bit range (k > 20)");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i)
        f *= i;
    return f;
}

namespace {

std::map<std::uint64_t, std::size_t> value_multiplicities(const monomial& m) {
    std::map<std::uint64_t, std::size_t> mult;
    for (std::uint64_t e : m.exps())
        ++mult[e];
    return mult;
}

}  // namespace

std::uint64_t stabilizer_order(const monomial& m) {
    std::uint64_t order = 1;
    for (const auto& [value, count] : value_multiplicities(m))
        order *= factorial(count);
    return order;
}

std::vector<permutation> stabilizer_generators(const monomial& m) {
    // Positions of each exponent value, ascending; consecutive pairs give the
    // adjacent transpositions of the Young subgroup.
    std::map<std::uint64_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < m.n(); ++i)
        classes[m.exps()[i]].push_back(i + 1);
    std::vector<permutation> gens;
    for (const auto& [value, positions] : classes) {
        for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
            std::vector<std::size_t> img(m.n());
            std::iota(img.begin(), img.end(), std::size_t{1});
            std::swap(img[positions[k] - 1], img[positions[k + 1] - 1]);
            gens.emplace_back(std::move(img));
        }
    }
    return gens;
}

std::vector<monomial> orbit(const monomial& m) {
    std::vector<std::uint64_t> v(m.exps());
    std::sort(v.begin(), v.end());
    std::vector<monomial> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    // next_permutation yields distinct arrangements in ascending lex order.
    std::reverse(out.begin(), out.end());
    return out;
}

permutation rep_permutation(const monomial& base, const monomial& target) {
    if (base.n() != target.n())
        throw dimension_error("rep_permutation: mismatched variable counts");
    // Pair positions of each value: ascending in base onto ascending in
    // target. Per class this is forced to be increasing, which makes the
    // image vector lexicographically least overall.
    std::map<std::uint64_t, std::vector<std::size_t>> where;
    for (std::size_t j = 0; j < target.n(); ++j)
        where[target.exps()[j]].push_back(j);
    std::map<std::uint64_t, std::size_t> next;
    std::vector<std::size_t> img(base.n());
    for (std::size_t i = 0; i < base.n(); ++i) {
        const std::uint64_t v = base.exps()[i];
        auto it = where.find(v);
        if (it == where.end() || next[v] >= it->second.size())
            throw argument_error("rep_permutation: monomials are not in the same orbit");
        img[i] = it->second[next[v]++] + 1;
    }
    return permutation(std::move(img));
}

permutation sort_permutation(const monomial& m) {
    std::vector<std::uint64_t> sorted(m.exps());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return rep_permutation(monomial(std::move(sorted)), m);
}

transversal transversal_of(const monomial& m) {
    transversal t{m, {}};
    for (const monomial& image : orbit(m))
        t.reps.push_back(rep_permutation(m, image));
    return t;
}

}  // namespace symdecomp
