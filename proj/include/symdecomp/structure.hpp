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

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symdecomp/group.hpp"
#include "symdecomp/index_set.hpp"
#include "symdecomp/monomial.hpp"
#include "symdecomp/ordering.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

/// The staircase monomial of an index set: the product over i in I\{n} of
/// x1...xi, i.e. the leading monomial of prod_{i in I} d_i with the x1...xn
/// factor removed. Always in reduced form.
monomial e_prime(const index_set& iset);

/// A product of powers of the d_i with i restricted to an index set.
/// Zero powers are normalized away; the unit (empty product) is allowed.
class d_monomial {
  public:
    d_monomial(index_set iset, std::map<std::size_t, std::uint64_t> powers);

    static d_monomial unit(index_set iset);

    const index_set& iset() const noexcept { return iset_; }
    const std::map<std::size_t, std::uint64_t>& powers() const noexcept { return powers_; }
    std::uint64_t power(std::size_t i) const;
    bool is_unit_monomial() const noexcept { return powers_.empty(); }

    /// Degree as an element of S: sum of i * t_i.
    std::uint64_t degree_in_s() const noexcept;

    /// The leading monomial of the expansion: prod lmlex(d_i)^t_i.
    monomial lmlex_in_s() const;

    std::string to_string() const;  // "1" or "d1*d2^2"

    bool operator==(const d_monomial& rhs) const noexcept = default;
    std::strong_ordering operator<=>(const d_monomial& rhs) const noexcept = default;

  private:
    index_set iset_;
    std::map<std::size_t, std::uint64_t> powers_;
};

/// Exact expansion into S: the product of elementary symmetric polynomial
/// powers.
template <coefficient_domain D>
polynomial<D> dmonomial_expand(const d_monomial& r) {
    const std::size_t n = r.iset().n();
    polynomial<D> out = polynomial<D>::constant(n, D::one());
    for (const auto& [i, t] : r.powers()) {
        const polynomial<D> di = elementary_symmetric<D>(n, i);
        for (std::uint64_t k = 0; k < t; ++k)
            out = out * di;
    }
    return out;
}

/// Element of k[d_I]: a finitely supported combination of d_I-monomials.
template <coefficient_domain D>
class d_polynomial {
  public:
    using coeff = typename D::value_type;

    explicit d_polynomial(index_set iset) : iset_(std::move(iset)) {}

    const index_set& iset() const noexcept { return iset_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<d_monomial, coeff>& terms() const noexcept { return terms_; }

    void add_term(const d_monomial& r, coeff c) {
        if (!(r.iset() == iset_))
            throw argument_error("d_polynomial: term over a different index set");
        if (D::is_zero(c))
            return;
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, std::move(c));
            return;
        }
        it->second = D::add(it->second, c);
        if (D::is_zero(it->second))
            terms_.erase(it);
    }

    polynomial<D> expand() const {
        polynomial<D> out(iset_.n());
        for (const auto& [r, c] : terms_)
            out += scale<D>(c, dmonomial_expand<D>(r));
        return out;
    }

  private:
    index_set iset_;
    std::map<d_monomial, coeff> terms_;
};

/// A validated generator e_I for the module V_I, together with the
/// transversal data of its leading monomial. The three conditions:
///   glm(generator) == { e_prime(I) } exactly,
///   the permutations fixing the generator are exactly those fixing its
///   leading monomial,
///   the coefficient of the leading monomial is a unit.
template <coefficient_domain D>
struct generator_spec {
    index_set iset;
    polynomial<D> generator;
    monomial leading;
    typename D::value_type leading_coeff;
    /// Orbit of the leading monomial, lex-descending; orbit_elements[0] is the
    /// leading monomial itself.
    std::vector<monomial> orbit_elements;
    /// reps[j] maps leading to orbit_elements[j]; reps[0] is the identity.
    std::vector<permutation> reps;

    std::size_t dimension() const noexcept { return reps.size(); }

    /// Index of an orbit element; the coordinate slot of its coset.
    std::size_t rep_index(const monomial& image) const {
        auto it = std::lower_bound(orbit_elements.begin(), orbit_elements.end(), image,
                                   lex_greater{});
        if (it == orbit_elements.end() || !(*it == image))
            throw internal_error("generator_spec: monomial not in the leading orbit");
        return static_cast<std::size_t>(it - orbit_elements.begin());
    }
};

/// dim V_I = n! / (i1! (i2-i1)! ... (n-i_{m-1})!) for I = {i1 < ... < im = n},
/// computed exactly; equals the transversal length of e_prime(I).
std::uint64_t module_dimension(const index_set& iset);

/// Checks the three generator conditions and builds the spec; throws
/// generator_error naming the first violated condition.
template <coefficient_domain D>
generator_spec<D> validate_generator(const polynomial<D>& candidate, const index_set& iset) {
    if (candidate.is_zero())
        throw argument_error("validate_generator: candidate must be nonzero");
    if (candidate.n() != iset.n())
        throw dimension_error("validate_generator: candidate over mismatched variable count");

    const monomial leading = e_prime(iset);
    const std::vector<monomial> leading_set = glm(candidate);
    if (leading_set.size() != 1 || !(leading_set.front() == leading))
        throw generator_error(generator_error::kind::leading_set,
                              "validate_generator: leading set is not { e_prime(I) }");

    // Stabilizer equality without touching all of Sym(n): the Young
    // generators of the leading monomial must fix the candidate, and the
    // transversal must move it to pairwise distinct images.
    for (const permutation& g : stabilizer_generators(leading))
        if (!(apply_poly(g, candidate) == candidate))
            throw generator_error(generator_error::kind::stabilizer,
                                  "validate_generator: stabilizer of the leading monomial "
                                  "does not fix the candidate");
    // The previous check puts the candidate's stabilizer above the Young
    // subgroup of the leading monomial, so that stabilizer is a union of
    // cosets and equality holds exactly when no non-identity representative
    // fixes the candidate. That also makes the transversal images pairwise
    // distinct.
    transversal t = transversal_of(leading);
    for (const permutation& rep : t.reps)
        if (!rep.is_identity() && apply_poly(rep, candidate) == candidate)
            throw generator_error(generator_error::kind::stabilizer,
                                  "validate_generator: candidate has a larger "
                                  "stabilizer than its leading monomial");

    typename D::value_type lc = candidate.coefficient(leading);
    if (!D::is_unit(lc))
        throw generator_error(generator_error::kind::unit,
                              "validate_generator: leading coefficient is not a unit");

    generator_spec<D> spec{iset, candidate, leading, std::move(lc), orbit(leading),
                           std::move(t.reps)};
    return spec;
}

/// The default generator: the monomial e_prime(I) with coefficient one.
template <coefficient_domain D>
generator_spec<D> default_generator(const index_set& iset) {
    return validate_generator<D>(polynomial<D>(e_prime(iset), D::one()), iset);
}

/// One basis element per coset of the stabilizer of the leading monomial:
/// (rep, rep * generator), in the stored transversal order. The polynomials
/// are linearly independent and span V_I.
template <coefficient_domain D>
std::vector<std::pair<permutation, polynomial<D>>> module_basis(const generator_spec<D>& spec) {
    std::vector<std::pair<permutation, polynomial<D>>> out;
    out.reserve(spec.reps.size());
    for (const permutation& rep : spec.reps)
        out.emplace_back(rep, apply_poly(rep, spec.generator));
    return out;
}

/// Element of V_I in transversal coordinates: the finitely many nonzero
/// lambda_g over coset representatives. The expansion sum_g lambda_g g.e_I
/// is the unique such expression.
template <coefficient_domain D>
struct module_element {
    std::shared_ptr<const generator_spec<D>> spec;
    std::map<std::size_t, typename D::value_type> coords;

    bool is_zero() const noexcept { return coords.empty(); }

    polynomial<D> expand() const {
        polynomial<D> out(spec->iset.n());
        for (const auto& [j, lambda] : coords) {
            if (j >= spec->reps.size())
                throw internal_error("module_element: coordinate index out of range");
            out += scale<D>(lambda, apply_poly(spec->reps[j], spec->generator));
        }
        return out;
    }
};

}  // namespace symdecomp
