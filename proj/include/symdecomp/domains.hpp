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
#include <concepts>
#include <string>

#include "symdecomp/errors.hpp"

namespace symdecomp {

/// A coefficient domain: a commutative unital ring with no zero divisors,
/// modeled as a stateless traits type. unit_inverse is defined on units only;
/// it is what lets algorithms cancel a unit leading coefficient without a
/// general division operation.
template <typename D>
concept coefficient_domain =
    requires(const typename D::value_type& a, const typename D::value_type& b,
             const std::string& s) {
        typename D::value_type;
        { D::zero() } -> std::same_as<typename D::value_type>;
        { D::one() } -> std::same_as<typename D::value_type>;
        { D::neg(a) } -> std::same_as<typename D::value_type>;
        { D::add(a, b) } -> std::same_as<typename D::value_type>;
        { D::mul(a, b) } -> std::same_as<typename D::value_type>;
        { D::eq(a, b) } -> std::convertible_to<bool>;
        { D::is_zero(a) } -> std::convertible_to<bool>;
        { D::is_unit(a) } -> std::convertible_to<bool>;
        { D::unit_inverse(a) } -> std::same_as<typename D::value_type>;
        { D::to_string(a) } -> std::same_as<std::string>;
        { D::from_string(s) } -> std::same_as<typename D::value_type>;
    };

namespace detail {

// Decimal integer, optionally negative, normalized so leading zeros cannot
// trip the octal/hex prefix rules of the underlying string constructor.
// Rejects everything non-decimal.
inline std::string checked_decimal_integer(const std::string& s) {
    const bool negative = !s.empty() && s[0] == '-';
    std::size_t i = negative ? 1 : 0;
    if (i >= s.size())
        throw argument_error("invalid integer literal: \"" + s + "\"");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw argument_error("invalid integer literal: \"" + s + "\"");
    while (i + 1 < s.size() && s[i] == '0')
        ++i;
    return (negative ? "-" : "") + s.substr(i);
}

}  // namespace detail

/// Arbitrary-precision integers, the default domain. Units are +1 and -1.
struct integer_domain {
    using value_type = boost::multiprecision::cpp_int;

    static value_type zero() { return value_type(0); }
    static value_type one() { return value_type(1); }
    static value_type neg(const value_type& a) { return -a; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool is_zero(const value_type& a) { return a.is_zero(); }
    static bool is_unit(const value_type& a) { return a == 1 || a == -1; }

    static value_type unit_inverse(const value_type& a) {
        if (!is_unit(a))
            throw argument_error("unit_inverse: " + to_string(a) + " is not a unit in Z");
        return a;  // +-1 are self-inverse
    }

    static std::string to_string(const value_type& a) { return a.str(); }

    static value_type from_string(const std::string& s) {
        return value_type(detail::checked_decimal_integer(s));
    }
};

/// Arbitrary-precision rationals. Every nonzero element is a unit.
struct rational_domain {
    using value_type = boost::multiprecision::cpp_rational;

    static value_type zero() { return value_type(0); }
    static value_type one() { return value_type(1); }
    static value_type neg(const value_type& a) { return -a; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool is_zero(const value_type& a) { return a.is_zero(); }
    static bool is_unit(const value_type& a) { return !a.is_zero(); }

    static value_type unit_inverse(const value_type& a) {
        if (a.is_zero())
            throw argument_error("unit_inverse: zero is not a unit");
        return value_type(1) / a;
    }

    static std::string to_string(const value_type& a) { return a.str(); }

    static value_type from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return value_type(detail::checked_decimal_integer(s));
        const std::string num = detail::checked_decimal_integer(s.substr(0, slash));
        const std::string den = detail::checked_decimal_integer(s.substr(slash + 1));
        boost::multiprecision::cpp_int d(den);
        if (d.is_zero())
            throw argument_error("invalid rational literal (zero denominator): \"" + s + "\"");
        return value_type(boost::multiprecision::cpp_int(num), d);
    }
};

static_assert(coefficient_domain<integer_domain>);
static_assert(coefficient_domain<rational_domain>);

}  // namespace symdecomp
