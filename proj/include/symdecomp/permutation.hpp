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

#include <cstddef>
#include <vector>

#include "symdecomp/errors.hpp"
#include "symdecomp/monomial.hpp"

namespace symdecomp {

/// A bijection of {1..n}, stored as the 1-indexed image vector
/// images[i-1] = g(i).
class permutation {
  public:
    explicit permutation(std::vector<std::size_t> images);

    static permutation identity(std::size_t n);

    std::size_t n() const noexcept { return images_.size(); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    /// g(i) for 1-based i.
    std::size_t image(std::size_t i) const;

    bool is_identity() const noexcept;

    permutation inverse() const;

    bool operator==(const permutation& rhs) const noexcept = default;

  private:
    std::vector<std::size_t> images_;
};

/// Composition applying h first: (g o h)(i) = g(h(i)). Fixed once; the action
/// axiom apply(g, apply(h, m)) == apply(compose(g, h), m) pins the convention.
permutation compose(const permutation& g, const permutation& h);

/// The action g.x_i = x_{g(i)} on monomials: the exponent of x_{g(i)} in g.m
/// equals the exponent of x_i in m.
monomial apply(const permutation& g, const monomial& m);

}  // namespace symdecomp
