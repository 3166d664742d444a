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

#include "symdecomp/index_set.hpp"

#include <algorithm>
#include <utility>

namespace symdecomp {

index_set::index_set(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)) {
    if (n_ == 0)
        throw index_set_error("index_set: variable count must be positive");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw index_set_error("index_set: duplicate member");
    for (std::size_t i : members_)
        if (i < 1 || i > n_)
            throw index_set_error("index_set: member out of range [1, n]");
    if (members_.empty() || members_.back() != n_)
        throw index_set_error("index_set: n must be a member");
}

bool index_set::contains(std::size_t i) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::string index_set::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k > 0)
            s += ",";
        s += std::to_string(members_[k]);
    }
    s += "}";
    return s;
}

std::vector<index_set> all_index_sets(std::size_t n) {
    if (n == 0)
        throw index_set_error("all_index_sets: variable count must be positive");
    if (n > 24)
        throw argument_error("all_index_sets: too many subsets to enumerate");
    std::vector<index_set> out;
    const std::size_t subsets = std::size_t{1} << (n - 1);
    std::vector<std::vector<std::size_t>> member_lists;
    member_lists.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 1; i < n; ++i)
            if (mask & (std::size_t{1} << (i - 1)))
                members.push_back(i);
        members.push_back(n);
        member_lists.push_back(std::move(members));
    }
    // Smallest sets first, {n} up to the full [n].
    std::sort(member_lists.begin(), member_lists.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    for (auto& members : member_lists)
        out.emplace_back(n, std::move(members));
    return out;
}

}  // namespace symdecomp
