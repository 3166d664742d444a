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

#include "symdecomp/enumeration.hpp"

#include <functional>

namespace symdecomp {

using boost::multiprecision::cpp_int;

cpp_int binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a)
        return 0;
    b = std::min<std::uint64_t>(b, a - b);
    cpp_int c = 1;
    for (std::uint64_t k = 1; k <= b; ++k) {
        c *= a - b + k;
        c /= k;
    }
    return c;
}

cpp_int graded_dimension(std::size_t n, std::uint64_t degree) {
    return binomial(degree + n - 1, n - 1);
}

std::vector<monomial> monomial_basis(std::size_t n, std::uint64_t degree) {
    if (n == 0)
        throw argument_error("monomial_basis: variable count must be positive");
    std::vector<monomial> out;
    std::vector<std::uint64_t> exps(n, 0);
    // Descend from the lex-greatest composition (degree, 0, ..., 0).
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                              std::uint64_t left) {
        if (pos + 1 == n) {
            exps[pos] = left;
            out.emplace_back(exps);
            return;
        }
        for (std::uint64_t e = left + 1; e-- > 0;) {
            exps[pos] = e;
            rec(pos + 1, left - e);
        }
        exps[pos] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<d_monomial> enumerate_d_monomials(const index_set& iset, std::uint64_t degree) {
    std::vector<d_monomial> out;
    const auto& members = iset.members();
    std::map<std::size_t, std::uint64_t> powers;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k,
                                                              std::uint64_t left) {
        if (k == members.size()) {
            if (left == 0)
                out.emplace_back(iset, powers);
            return;
        }
        const std::uint64_t i = members[k];
        for (std::uint64_t t = 0; t * i <= left; ++t) {
            if (t > 0)
                powers[members[k]] = t;
            rec(k + 1, left - t * i);
        }
        powers.erase(members[k]);
    };
    rec(0, degree);
    return out;
}

std::uint64_t count_d_monomials(const index_set& iset, std::uint64_t degree) {
    const auto& members = iset.members();
    std::function<std::uint64_t(std::size_t, std::uint64_t)> rec =
        [&](std::size_t k, std::uint64_t left) -> std::uint64_t {
        if (k == members.size())
            return left == 0 ? 1 : 0;
        std::uint64_t total = 0;
        const std::uint64_t i = members[k];
        for (std::uint64_t t = 0; t * i <= left; ++t)
            total += rec(k + 1, left - t * i);
        return total;
    };
    return rec(0, degree);
}

}  // namespace symdecomp
