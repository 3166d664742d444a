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

#include "symdecomp/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace symdecomp {

monomial::monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {
    if (exps_.empty())
        throw argument_error("monomial: variable count must be positive");
}

monomial monomial::one(std::size_t n) {
    if (n == 0)
        throw argument_error("monomial: variable count must be positive");
    return monomial(std::vector<std::uint64_t>(n, 0));
}

std::uint64_t monomial::exp(std::size_t var) const {
    if (var < 1 || var > exps_.size())
        throw argument_error("monomial: variable index out of range");
    return exps_[var - 1];
}

std::uint64_t monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

monomial monomial::operator*(const monomial& rhs) const {
    if (n() != rhs.n())
        throw dimension_error("monomial product: mismatched variable counts");
    std::vector<std::uint64_t> out(exps_);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += rhs.exps_[i];
    return monomial(std::move(out));
}

std::strong_ordering lex_compare(const monomial& a, const monomial& b) {
    if (a.n() != b.n())
        throw dimension_error("lex_compare: mismatched variable counts");
    for (std::size_t i = 0; i < a.n(); ++i) {
        if (a.exps()[i] != b.exps()[i])
            return a.exps()[i] < b.exps()[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace symdecomp
