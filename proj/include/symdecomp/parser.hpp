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

#include <string>
#include <string_view>

#include "symdecomp/permutation.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

namespace parser_detail {

/// Byte cursor with offset-carrying failures.
struct cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            ++pos;
    }

    std::string excerpt() const {
        if (eof())
            return "end of input";
        const std::size_t len = std::min<std::size_t>(8, text.size() - pos);
        return "\"" + std::string(text.substr(pos, len)) + "\"";
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw parse_error(pos, expected, excerpt());
    }

    bool at_digit() const { return !eof() && peek() >= '0' && peek() <= '9'; }

    /// Digit run as a string; arbitrary length.
    std::string digits(const std::string& what) {
        if (!at_digit())
            fail(what);
        const std::size_t start = pos;
        while (at_digit())
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    /// Digit run as a bounded machine integer.
    std::uint64_t small_number(const std::string& what) {
        if (!at_digit())
            fail(what);
        std::uint64_t value = 0;
        while (at_digit()) {
            const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (UINT64_MAX - digit) / 10)
                fail("a smaller number");
            value = value * 10 + digit;
            ++pos;
        }
        return value;
    }
};

}  // namespace parser_detail

/// Grammar: poly := ['-'|'+'] term (('+'|'-') term)*
///          term := [integer] ('*'? var)*
///          var  := 'x' index ('^' exponent)?
/// Whitespace-insensitive between tokens; like terms combined; '^0' is
/// normalized away; integer literals are arbitrary precision. Variables with
/// index outside [1, n] are rejected.
template <coefficient_domain D>
polynomial<D> parse_polynomial(std::string_view text, std::size_t n) {
    if (n == 0)
        throw argument_error("parse_polynomial: variable count must be positive");
    parser_detail::cursor cur{text};
    polynomial<D> out(n);

    cur.skip_ws();
    if (cur.eof())
        cur.fail("a term");

    bool first = true;
    while (true) {
        bool negative = false;
        cur.skip_ws();
        if (first) {
            if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) {
                negative = cur.peek() == '-';
                ++cur.pos;
            }
        } else {
            if (cur.eof())
                break;
            if (cur.peek() == '-' || cur.peek() == '+') {
                negative = cur.peek() == '-';
                ++cur.pos;
            } else {
                cur.fail("'+' or '-'");
            }
        }
        first = false;

        cur.skip_ws();
        typename D::value_type coeff = D::one();
        bool saw_integer = false;
        if (cur.at_digit()) {
            coeff = D::from_string(cur.digits("an integer"));
            saw_integer = true;
        }

        std::vector<std::uint64_t> exps(n, 0);
        bool saw_var = false;
        while (true) {
            cur.skip_ws();
            if (!cur.eof() && cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
                if (cur.eof() || cur.peek() != 'x')
                    cur.fail("a variable after '*'");
            }
            if (cur.eof() || cur.peek() != 'x')
                break;
            ++cur.pos;
            const std::size_t index_pos = cur.pos;
            const std::uint64_t index = cur.small_number("a variable index");
            if (index < 1 || index > n)
                throw parse_error(index_pos, "a variable index in [1, " + std::to_string(n) + "]",
                                  "x" + std::to_string(index));
            std::uint64_t exponent = 1;
            cur.skip_ws();
            if (!cur.eof() && cur.peek() == '^') {
                ++cur.pos;
                cur.skip_ws();
                exponent = cur.small_number("an exponent");
            }
            const std::uint64_t old = exps[index - 1];
            if (exponent > UINT64_MAX - old)
                cur.fail("a smaller exponent");
            exps[index - 1] = old + exponent;
            saw_var = true;
        }

        if (!saw_integer && !saw_var)
            cur.fail("a term");
        if (negative)
            coeff = D::neg(coeff);
        out.add_term(monomial(std::move(exps)), std::move(coeff));

        cur.skip_ws();
        if (cur.eof())
            break;
    }
    return out;
}

namespace render_detail {

inline void append_monomial_body(std::string& s, const monomial& m, bool coeff_is_one,
                                 const std::string& magnitude) {
    bool wrote = false;
    if (!coeff_is_one || m.is_one()) {
        s += magnitude;
        wrote = true;
    }
    for (std::size_t i = 0; i < m.n(); ++i) {
        const std::uint64_t e = m.exps()[i];
        if (e == 0)
            continue;
        if (wrote)
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (e != 1)
            s += "^" + std::to_string(e);
        wrote = true;
    }
}

}  // namespace render_detail

/// Canonical text form: terms lex-descending, " + "/" - " separators, '^1'
/// and '*1' elided. parse(render(u)) == u for every polynomial.
template <coefficient_domain D>
std::string render_polynomial(const polynomial<D>& u) {
    if (u.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        std::string cs = D::to_string(c);
        const bool negative = !cs.empty() && cs[0] == '-';
        std::string magnitude = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative)
                s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        render_detail::append_monomial_body(s, m, magnitude == "1", magnitude);
        first = false;
    }
    return s;
}

/// Single monomial as text (its coefficient-1 term), e.g. "x1^2*x2".
inline std::string render_monomial(const monomial& m) {
    std::string s;
    render_detail::append_monomial_body(s, m, true, "1");
    return s;
}

/// Cycle notation "(1 2)(3 4)"; cycles must be disjoint. "id", "()" and the
/// empty string denote the identity. Elements may be separated by spaces or
/// commas.
permutation parse_permutation(std::string_view text, std::size_t n);

/// Cycle form of g, fixed points omitted; "id" for the identity.
std::string render_permutation(const permutation& g);

}  // namespace symdecomp
