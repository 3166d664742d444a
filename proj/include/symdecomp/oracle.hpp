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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdecomp/decompose.hpp"
#include "symdecomp/enumeration.hpp"
#include "symdecomp/index_set.hpp"

namespace symdecomp {

/// Brute-force verification of one graded piece: the candidates
/// expand(r) * (g.e_I) of total degree `degree` must number exactly
/// dim S_degree and have full rank over the monomial basis. Everything is
/// exact integer arithmetic; there is no tolerance anywhere.
struct graded_report {
    std::size_t n = 0;
    std::uint64_t degree = 0;
    boost::multiprecision::cpp_int expected_dim;
    std::size_t candidate_count = 0;
    std::size_t rank = 0;
    bool pass = false;
    /// Empty on pass; "count_mismatch" (dimension bookkeeping is off) or
    /// "rank_deficient" (a dependence, i.e. injectivity fails) otherwise.
    std::string failure_kind;
    /// For rank deficiency: candidate labels with the nonzero multipliers of
    /// a vanishing integer combination.
    std::vector<std::pair<std::string, std::string>> witness;
};

struct series_report {
    std::size_t n = 0;
    std::uint64_t max_degree = 0;
    std::vector<boost::multiprecision::cpp_int> lhs;
    std::vector<boost::multiprecision::cpp_int> rhs;
    std::optional<std::size_t> first_mismatch;
    bool pass = false;
};

struct audit_entry {
    index_set iset;
    std::uint64_t formula_dim = 0;
    std::size_t transversal_length = 0;
    bool match = false;
};

struct audit_report {
    std::size_t n = 0;
    std::vector<audit_entry> entries;
    bool pass = false;
};

struct roundtrip_failure {
    std::size_t trial = 0;
    std::string input_text;
};

struct roundtrip_report {
    std::size_t n = 0;
    std::uint64_t max_degree = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string prng_name;
    std::vector<roundtrip_failure> failures;
    bool pass = false;
};

/// Refuses degrees where dim S_degree exceeds this.
inline constexpr std::uint64_t graded_check_capacity = 50'000;

graded_report graded_basis_check(std::size_t n, std::uint64_t degree,
                                 const generator_table<integer_domain>& generators = {});

/// Compares, truncated at max_degree, the series
/// sum_I dim V_I * t^{deg e_I'} / prod_{i in I} (1 - t^i) against (1-t)^{-n}.
series_report hilbert_check(std::size_t n, std::uint64_t max_degree);

/// For every I containing n: the closed dimension formula against the
/// enumerated transversal length. Requires n <= 8.
audit_report dimension_audit(std::size_t n);

/// Seeded random polynomials, each decomposed and recomposed; exact equality
/// required. The seed reproduces failures bit-for-bit.
roundtrip_report roundtrip_suite(std::size_t n, std::uint64_t max_degree, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace symdecomp
