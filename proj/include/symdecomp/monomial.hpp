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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symdecomp/errors.hpp"

namespace symdecomp {

/// An exponent vector in the variables x1..xn. Immutable after construction.
class monomial {
  public:
    explicit monomial(std::vector<std::uint64_t> exps);

    /// The monomial 1 (all exponents zero) in n variables.
    static monomial one(std::size_t n);

    std::size_t n() const noexcept { return exps_.size(); }
    const std::vector<std::uint64_t>& exps() const noexcept { return exps_; }

    /// Exponent of x_var, var being 1-based.
    std::uint64_t exp(std::size_t var) const;

    /// Total degree: the sum of all exponents.
    std::uint64_t degree() const noexcept;

    bool is_one() const noexcept;

    /// Product of monomials: exponent-wise sum.
    monomial operator*(const monomial& rhs) const;

    bool operator==(const monomial& rhs) const noexcept = default;

  private:
    std::vector<std::uint64_t> exps_;
};

/// Position-by-position comparison of exponent vectors starting at x1.
std::strong_ordering lex_compare(const monomial& a, const monomial& b);

/// Comparator putting the lex-greatest monomial first; the term order of
/// every polynomial in this library.
struct lex_greater {
    bool operator()(const monomial& a, const monomial& b) const {
        return std::is_gt(lex_compare(a, b));
    }
};

}  // namespace symdecomp
