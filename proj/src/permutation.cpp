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

#include "symdecomp/permutation.hpp"

#include <numeric>
#include <utility>

namespace symdecomp {

permutation::permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty())
        throw argument_error("permutation: degree must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v < 1 || v > images_.size() || seen[v - 1])
            throw argument_error("permutation: images must be a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

permutation permutation::identity(std::size_t n) {
    if (n == 0)
        throw argument_error("permutation: degree must be positive");
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{1});
    return permutation(std::move(img));
}

std::size_t permutation::image(std::size_t i) const {
    if (i < 1 || i > images_.size())
        throw argument_error("permutation: point out of range");
    return images_[i - 1];
}

bool permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i + 1)
            return false;
    return true;
}

permutation permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i] - 1] = i + 1;
    return permutation(std::move(inv));
}

permutation compose(const permutation& g, const permutation& h) {
    if (g.n() != h.n())
        throw dimension_error("compose: mismatched permutation degrees");
    std::vector<std::size_t> img(g.n());
    for (std::size_t i = 0; i < g.n(); ++i)
        img[i] = g.images()[h.images()[i] - 1];
    return permutation(std::move(img));
}

monomial apply(const permutation& g, const monomial& m) {
    if (g.n() != m.n())
        throw dimension_error("apply: permutation and monomial degrees differ");
    std::vector<std::uint64_t> out(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        out[g.images()[i] - 1] = m.exps()[i];
    return monomial(std::move(out));
}

}  // namespace symdecomp
