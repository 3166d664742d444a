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

#include "symdecomp/decompose.hpp"

namespace symdecomp {

witness leading_witness(const monomial& m) {
    const std::size_t n = m.n();
    const permutation g = sort_permutation(m);
    const monomial sorted = canonical(m).canonical_form;

    // sorted = prod_i lmlex(d_i)^{t_i} with t_i the i-th exponent drop.
    std::vector<std::uint64_t> t(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i)
        t[i] = sorted.exps()[i - 1] - sorted.exps()[i];
    t[n] = sorted.exps()[n - 1];

    std::vector<std::size_t> members;
    for (std::size_t i = 1; i < n; ++i)
        if (t[i] != 0)
            members.push_back(i);
    members.push_back(n);
    index_set iset(n, std::move(members));

    // One copy of each lmlex(d_i), i in I\{n}, is already accounted for by
    // e_prime(I); d_n keeps its full power.
    std::map<std::size_t, std::uint64_t> powers;
    for (std::size_t i : iset.members()) {
        const std::uint64_t p = (i == n) ? t[n] : t[i] - 1;
        if (p != 0)
            powers[i] = p;
    }
    return witness{iset, d_monomial(iset, std::move(powers)), g};
}

}  // namespace symdecomp
