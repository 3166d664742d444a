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
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symdecomp/domains.hpp"
#include "symdecomp/monomial.hpp"

namespace symdecomp {

/// Element of S = k[x1..xn]: a finitely supported map monomial -> nonzero
/// coefficient. Terms are stored in lex-descending order, so iteration and
/// serialization are deterministic and the leading monomial is the first
/// entry. The variable count n is fixed at construction, also for the zero
/// polynomial.
template <coefficient_domain D>
class polynomial {
  public:
    using coeff = typename D::value_type;
    using term_map = std::map<monomial, coeff, lex_greater>;

    explicit polynomial(std::size_t n) : n_(checked_n(n)) {}

    polynomial(const monomial& m, coeff c) : n_(m.n()) { add_term(m, std::move(c)); }

    static polynomial zero(std::size_t n) { return polynomial(n); }

    static polynomial constant(std::size_t n, coeff c) {
        return polynomial(monomial::one(n), std::move(c));
    }

    std::size_t n() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const term_map& terms() const noexcept { return terms_; }

    /// Coefficient of m, zero when the monomial is absent.
    coeff coefficient(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? D::zero() : it->second;
    }

    /// Greatest total degree among terms.
    std::uint64_t degree() const {
        if (is_zero())
            throw zero_polynomial_error("degree of the zero polynomial is undefined");
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero())
            return true;
        const std::uint64_t d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                return false;
        return true;
    }

    std::map<std::uint64_t, polynomial> homogeneous_components() const {
        std::map<std::uint64_t, polynomial> out;
        for (const auto& [m, c] : terms_) {
            auto [it, inserted] = out.try_emplace(m.degree(), n_);
            it->second.add_term(m, c);
        }
        return out;
    }

    /// Accumulates c onto the coefficient of m, dropping the term when the
    /// sum is zero. The one mutation primitive everything else is built on.
    void add_term(const monomial& m, coeff c) {
        if (m.n() != n_)
            throw dimension_error("polynomial: term over mismatched variable count");
        if (D::is_zero(c))
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
            return;
        }
        it->second = D::add(it->second, c);
        if (D::is_zero(it->second))
            terms_.erase(it);
    }

    polynomial& operator+=(const polynomial& rhs) {
        check_same_n(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, c);
        return *this;
    }

    polynomial& operator-=(const polynomial& rhs) {
        check_same_n(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, D::neg(c));
        return *this;
    }

    friend polynomial operator+(polynomial lhs, const polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend polynomial operator-(polynomial lhs, const polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    polynomial operator-() const {
        polynomial out(n_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, D::neg(c));
        return out;
    }

    friend polynomial operator*(const polynomial& lhs, const polynomial& rhs) {
        lhs.check_same_n(rhs);
        polynomial out(lhs.n_);
        for (const auto& [ma, ca] : lhs.terms_)
            for (const auto& [mb, cb] : rhs.terms_)
                out.add_term(ma * mb, D::mul(ca, cb));
        return out;
    }

    bool operator==(const polynomial& rhs) const {
        if (n_ != rhs.n_ || terms_.size() != rhs.terms_.size())
            return false;
        auto it = terms_.begin();
        auto jt = rhs.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !D::eq(it->second, jt->second))
                return false;
        return true;
    }

    bool operator!=(const polynomial& rhs) const { return !(*this == rhs); }

  private:
    static std::size_t checked_n(std::size_t n) {
        if (n == 0)
            throw argument_error("polynomial: variable count must be positive");
        return n;
    }

    void check_same_n(const polynomial& rhs) const {
        if (n_ != rhs.n_)
            throw dimension_error("polynomial arithmetic: mismatched variable counts");
    }

    std::size_t n_;
    term_map terms_;
};

template <coefficient_domain D>
polynomial<D> scale(const typename D::value_type& c, const polynomial<D>& u) {
    polynomial<D> out(u.n());
    for (const auto& [m, uc] : u.terms())
        out.add_term(m, D::mul(c, uc));
    return out;
}

/// The lex-greatest monomial with nonzero coefficient.
template <coefficient_domain D>
monomial lmlex(const polynomial<D>& u) {
    if (u.is_zero())
        throw zero_polynomial_error("lmlex of the zero polynomial is undefined");
    return u.terms().begin()->first;
}

/// The i-th elementary symmetric polynomial in x1..xn: the sum over all
/// size-i subsets of variables of their product, C(n,i) terms.
template <coefficient_domain D>
polynomial<D> elementary_symmetric(std::size_t n, std::size_t i) {
    if (n == 0)
        throw argument_error("elementary_symmetric: variable count must be positive");
    if (i < 1 || i > n)
        throw argument_error("elementary_symmetric: index must lie in [1, n]");
    polynomial<D> out(n);
    // Enumerate size-i subsets of {0..n-1} as an increasing index vector.
    std::vector<std::size_t> idx(i);
    for (std::size_t j = 0; j < i; ++j)
        idx[j] = j;
    while (true) {
        std::vector<std::uint64_t> exps(n, 0);
        for (std::size_t j : idx)
            exps[j] = 1;
        out.add_term(monomial(std::move(exps)), D::one());
        std::size_t k = i;
        while (k > 0 && idx[k - 1] == n - i + k - 1)
            --k;
        if (k == 0)
            break;
        ++idx[k - 1];
        for (std::size_t j = k; j < i; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

using int_polynomial = polynomial<integer_domain>;
using rat_polynomial = polynomial<rational_domain>;

}  // namespace symdecomp
