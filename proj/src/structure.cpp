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

#include "symdecomp/structure.hpp"

namespace symdecomp {

monomial e_prime(const index_set& iset) {
    const std::size_t n = iset.n();
    std::vector<std::uint64_t> exps(n, 0);
    for (std::size_t i : iset.members()) {
        if (i == n)
            continue;
        for (std::size_t j = 0; j < i; ++j)
            ++exps[j];
    }
    return monomial(std::move(exps));
}

d_monomial::d_monomial(index_set iset, std::map<std::size_t, std::uint64_t> powers)
    : iset_(std::move(iset)), powers_(std::move(powers)) {
    for (auto it = powers_.begin(); it != powers_.end();) {
        if (it->second == 0) {
            it = powers_.erase(it);
            continue;
        }
        if (!iset_.contains(it->first))
            throw index_set_error("d_monomial: power on an index outside the index set");
        ++it;
    }
}

d_monomial d_monomial::unit(index_set iset) {
    return d_monomial(std::move(iset), {});
}

std::uint64_t d_monomial::power(std::size_t i) const {
    auto it = powers_.find(i);
    return it == powers_.end() ? 0 : it->second;
}

std::uint64_t d_monomial::degree_in_s() const noexcept {
    std::uint64_t d = 0;
    for (const auto& [i, t] : powers_)
        d += static_cast<std::uint64_t>(i) * t;
    return d;
}

monomial d_monomial::lmlex_in_s() const {
    const std::size_t n = iset_.n();
    std::vector<std::uint64_t> exps(n, 0);
    for (const auto& [i, t] : powers_)
        for (std::size_t j = 0; j < i; ++j)
            exps[j] += t;
    return monomial(std::move(exps));
}

std::string d_monomial::to_string() const {
    if (powers_.empty())
        return "1";
    std::string s;
    for (const auto& [i, t] : powers_) {
        if (!s.empty())
            s += "*";
        s += "d" + std::to_string(i);
        if (t != 1)
            s += "^" + std::to_string(t);
    }
    return s;
}

std::uint64_t module_dimension(const index_set& iset) {
    // Multinomial of the composition (i1, i2-i1, ..., n-i_{m-1}), built from
    // binomials so intermediate values stay within 64 bits for n <= 20.
    const auto& members = iset.members();
    std::uint64_t remaining = iset.n();
    std::uint64_t dim = 1;
    std::size_t prev = 0;
    for (std::size_t i : members) {
        const std::uint64_t block = i - prev;
        // C(remaining, block)
        std::uint64_t c = 1;
        for (std::uint64_t k = 1; k <= block; ++k)
            c = c * (remaining - block + k) / k;
        dim *= c;
        remaining -= block;
        prev = i;
    }
    return dim;
}

}  // namespace symdecomp
