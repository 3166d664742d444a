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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "symdecomp/index_set.hpp"
#include "symdecomp/monomial.hpp"
#include "symdecomp/permutation.hpp"
#include "symdecomp/polynomial.hpp"
#include "symdecomp/structure.hpp"

namespace symdecomp {

/// Seeded mt19937_64 with plain modulo draws. The engine's output sequence is
/// fixed by the standard and no distribution objects are used, so streams
/// reproduce bit-for-bit across platforms and standard libraries.
class prng {
  public:
    static constexpr const char* name = "mt19937_64";

    explicit prng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : next() % k; }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::mt19937_64 eng_;
};

inline monomial random_monomial(prng& rng, std::size_t n, std::uint64_t max_degree) {
    std::vector<std::uint64_t> exps(n, 0);
    const std::uint64_t d = rng.below(max_degree + 1);
    for (std::uint64_t k = 0; k < d; ++k)
        ++exps[rng.below(n)];
    return monomial(std::move(exps));
}

/// Up to max_terms random terms with nonzero coefficients in
/// [-coeff_bound, coeff_bound]; terms may merge or cancel.
template <coefficient_domain D>
polynomial<D> random_polynomial(prng& rng, std::size_t n, std::uint64_t max_degree,
                                std::size_t max_terms = 20, std::int64_t coeff_bound = 9) {
    polynomial<D> out(n);
    const std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t k = 0; k < terms; ++k) {
        const std::int64_t magnitude = rng.int_in(1, coeff_bound);
        const std::int64_t value = rng.below(2) == 0 ? magnitude : -magnitude;
        out.add_term(random_monomial(rng, n, max_degree),
                     D::from_string(std::to_string(value)));
    }
    return out;
}

template <coefficient_domain D>
polynomial<D> random_nonzero_polynomial(prng& rng, std::size_t n, std::uint64_t max_degree,
                                        std::size_t max_terms = 20,
                                        std::int64_t coeff_bound = 9) {
    for (;;) {
        polynomial<D> u = random_polynomial<D>(rng, n, max_degree, max_terms, coeff_bound);
        if (!u.is_zero())
            return u;
    }
}

inline permutation random_permutation(prng& rng, std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i)
        img[i] = i + 1;
    for (std::size_t i = n; i > 1; --i)
        std::swap(img[i - 1], img[rng.below(i)]);
    return permutation(std::move(img));
}

inline index_set random_index_set(prng& rng, std::size_t n) {
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i < n; ++i)
        if (rng.below(2) == 0)
            members.push_back(i);
    members.push_back(n);
    return index_set(n, std::move(members));
}

inline d_monomial random_d_monomial(prng& rng, const index_set& iset,
                                    std::uint64_t max_power = 2) {
    std::map<std::size_t, std::uint64_t> powers;
    for (std::size_t i : iset.members()) {
        const std::uint64_t t = rng.below(max_power + 1);
        if (t != 0)
            powers[i] = t;
    }
    return d_monomial(iset, std::move(powers));
}

/// A nonzero element of V_I in transversal coordinates.
template <coefficient_domain D>
module_element<D> random_module_element(prng& rng,
                                        std::shared_ptr<const generator_spec<D>> spec,
                                        std::int64_t coeff_bound = 9) {
    module_element<D> elem{std::move(spec), {}};
    const std::size_t dim = elem.spec->dimension();
    for (std::size_t j = 0; j < dim; ++j) {
        if (rng.below(2) == 0)
            continue;
        const std::int64_t magnitude = rng.int_in(1, coeff_bound);
        const std::int64_t value = rng.below(2) == 0 ? magnitude : -magnitude;
        elem.coords.emplace(j, D::from_string(std::to_string(value)));
    }
    if (elem.coords.empty())
        elem.coords.emplace(rng.below(dim), D::one());
    return elem;
}

}  // namespace symdecomp
