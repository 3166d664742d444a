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
#include <stdexcept>
#include <string>
#include <utility>

namespace symdecomp {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable counts.
struct dimension_error : error {
    using error::error;
};

struct argument_error : error {
    using error::error;
};

/// Asked for the leading monomial of the zero polynomial.
struct zero_polynomial_error : error {
    using error::error;
};

/// An index set violating {n} ⊆ I ⊆ [n].
struct index_set_error : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

/// Refusal to start a computation that would exceed the configured resource cap.
struct capacity_error : error {
    using error::error;
};

/// An invariant the algorithms guarantee was violated; reaching this is a bug.
struct internal_error : error {
    using error::error;
};

/// A candidate generator failed one of the three validity conditions.
struct generator_error : error {
    enum class kind { leading_set, stabilizer, unit };

    generator_error(kind k, const std::string& msg) : error(msg), which(k) {}

    kind which;
};

struct parse_error : error {
    parse_error(std::size_t off, std::string exp, std::string fnd)
        : error("parse error at byte " + std::to_string(off) + ": expected " + exp +
                ", found " + fnd),
          offset(off),
          expected(std::move(exp)),
          found(std::move(fnd)) {}

    std::size_t offset;
    std::string expected;
    std::string found;
};

}  // namespace symdecomp
