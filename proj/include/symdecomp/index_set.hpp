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
#include <string>
#include <vector>

#include "symdecomp/errors.hpp"

namespace symdecomp {

/// A subset I of {1..n} with n in I: the index sets the modules V_I and the
/// rings k[d_I] range over. Members are kept sorted ascending.
class index_set {
  public:
    index_set(std::size_t n, std::vector<std::size_t> members);

    std::size_t n() const noexcept { return n_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    bool contains(std::size_t i) const noexcept;
    std::size_t size() const noexcept { return members_.size(); }

    std::string to_string() const;  // "{1,2,3}"

    bool operator==(const index_set& rhs) const noexcept = default;
    std::strong_ordering operator<=>(const index_set& rhs) const noexcept = default;

  private:
    std::size_t n_;
    std::vector<std::size_t> members_;
};

/// Every index set over n containing n, ordered ascending by member vector.
std::vector<index_set> all_index_sets(std::size_t n);

}  // namespace symdecomp
