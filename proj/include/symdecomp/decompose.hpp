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

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "symdecomp/enumeration.hpp"
#include "symdecomp/ordering.hpp"
#include "symdecomp/structure.hpp"

namespace symdecomp {

/// The witness triple for a monomial m: glm(expand(r) * g.e_I) == { m }.
struct witness {
    index_set iset;
    d_monomial r;
    permutation g;
};

/// Writes sorted(m) as a product of leading monomials of the d_i, reads off
/// I and the d_I-monomial r, and takes g to be the stable-sort permutation
/// with g^{-1} m = sorted(m).
witness leading_witness(const monomial& m);

template <coefficient_domain D>
using generator_table = std::map<index_set, std::shared_ptr<const generator_spec<D>>>;

/// The unique expression of a polynomial as sum_I sum_j r_j ⊗ v_j with
/// d_I-monomials r_j and module elements v_j of V_I. Within one component the
/// attached d-monomials are distinct and the terms are sorted by
/// lmlex(r) descending; all stored module elements are nonzero.
template <coefficient_domain D>
struct decomposition {
    struct term {
        d_monomial r;
        module_element<D> elem;
    };

    std::size_t n = 0;
    std::map<index_set, std::vector<term>> components;

    bool empty() const noexcept { return components.empty(); }

    std::size_t term_count() const noexcept {
        std::size_t k = 0;
        for (const auto& [iset, terms] : components)
            k += terms.size();
        return k;
    }

    bool operator==(const decomposition& rhs) const {
        if (n != rhs.n || components.size() != rhs.components.size())
            return false;
        auto it = components.begin();
        auto jt = rhs.components.begin();
        for (; it != components.end(); ++it, ++jt) {
            if (!(it->first == jt->first) || it->second.size() != jt->second.size())
                return false;
            for (std::size_t k = 0; k < it->second.size(); ++k) {
                const term& a = it->second[k];
                const term& b = jt->second[k];
                if (!(a.r == b.r) || !(a.elem.spec->generator == b.elem.spec->generator))
                    return false;
                if (a.elem.coords.size() != b.elem.coords.size())
                    return false;
                auto ca = a.elem.coords.begin();
                auto cb = b.elem.coords.begin();
                for (; ca != a.elem.coords.end(); ++ca, ++cb)
                    if (ca->first != cb->first || !D::eq(ca->second, cb->second))
                        return false;
            }
        }
        return true;
    }

    bool operator!=(const decomposition& rhs) const { return !(*this == rhs); }
};

namespace detail {

/// Looks up the generator for I, falling back to the default e_prime(I).
template <coefficient_domain D>
std::shared_ptr<const generator_spec<D>> spec_for(generator_table<D>& table,
                                                  const index_set& iset) {
    auto it = table.find(iset);
    if (it != table.end())
        return it->second;
    auto spec = std::make_shared<const generator_spec<D>>(default_generator<D>(iset));
    table.emplace(iset, spec);
    return spec;
}

template <coefficient_domain D>
void sort_component_terms(std::vector<typename decomposition<D>::term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::is_gt(lex_compare(a.r.lmlex_in_s(), b.r.lmlex_in_s()));
    });
}

struct glm_measure {
    monomial class_form;          // canonical form of the glm class
    std::vector<monomial> members;
};

/// One extraction loop of the surjectivity argument: repeatedly remove the
/// lex-greatest orbit-maximal monomial. The (class, member-set) measure must
/// strictly decrease every step; `cap` bounds the iteration count.
template <coefficient_domain D>
void extract(polynomial<D> p, generator_table<D>& table,
             const boost::multiprecision::cpp_int& cap, decomposition<D>& out) {
    std::optional<glm_measure> prev;
    boost::multiprecision::cpp_int iterations = 0;

    while (!p.is_zero()) {
        if (++iterations > cap)
            throw internal_error("decompose: iteration cap exceeded");

        std::vector<monomial> leading_set = glm(p);
        const monomial cls = canonical(leading_set.front()).canonical_form;
        if (prev.has_value()) {
            const auto cmp = lex_compare(cls, prev->class_form);
            if (std::is_gt(cmp))
                throw internal_error("decompose: glm class increased");
            if (std::is_eq(cmp)) {
                const bool shrank =
                    leading_set.size() < prev->members.size() &&
                    std::includes(prev->members.begin(), prev->members.end(),
                                  leading_set.begin(), leading_set.end(), lex_greater{});
                if (!shrank)
                    throw internal_error("decompose: glm set failed to shrink");
            }
        }
        prev = glm_measure{cls, leading_set};

        const monomial m = leading_set.front();
        const typename D::value_type lambda = p.coefficient(m);
        const witness w = leading_witness(m);
        auto spec = spec_for<D>(table, w.iset);

        const polynomial<D> prod =
            dmonomial_expand<D>(w.r) * apply_poly(w.g, spec->generator);
        {
            const std::vector<monomial> pg = glm(prod);
            if (pg.size() != 1 || !(pg.front() == m))
                throw internal_error("decompose: witness product has the wrong leading set");
        }
        const typename D::value_type cm = prod.coefficient(m);
        if (!D::is_unit(cm))
            throw internal_error("decompose: leading coefficient of witness product is "
                                 "not a unit");
        const typename D::value_type mu = D::mul(lambda, D::unit_inverse(cm));

        p -= scale<D>(mu, prod);

        const std::size_t rep = spec->rep_index(apply(w.g, spec->leading));
        auto& terms = out.components[w.iset];
        auto it = std::find_if(terms.begin(), terms.end(),
                               [&](const auto& t) { return t.r == w.r; });
        if (it == terms.end()) {
            terms.push_back({w.r, module_element<D>{spec, {{rep, mu}}}});
            continue;
        }
        auto& coords = it->elem.coords;
        auto ct = coords.find(rep);
        if (ct == coords.end()) {
            coords.emplace(rep, mu);
        } else {
            ct->second = D::add(ct->second, mu);
            if (D::is_zero(ct->second))
                coords.erase(ct);
        }
        if (coords.empty())
            terms.erase(it);
    }
}

}  // namespace detail

/// Inverse of the multiplication map: writes u as sum_I sum r ⊗ v with
/// recompose(decompose(u)) == u exactly. Homogeneous graded pieces are
/// processed independently when every supplied generator is homogeneous
/// (the default always is); a non-homogeneous generalized generator forces a
/// single loop because subtraction then mixes degrees.
template <coefficient_domain D>
decomposition<D> decompose(const polynomial<D>& u, const generator_table<D>& generators = {}) {
    decomposition<D> out;
    out.n = u.n();
    if (u.is_zero())
        return out;

    generator_table<D> table;
    bool homogeneous_generators = true;
    for (const auto& [iset, spec] : generators) {
        if (iset.n() != u.n())
            throw dimension_error("decompose: generator table over mismatched variable count");
        if (spec == nullptr)
            throw argument_error("decompose: null generator spec");
        table.emplace(iset, spec);
        homogeneous_generators =
            homogeneous_generators && spec->generator.is_homogeneous() &&
            spec->generator.degree() == spec->leading.degree();
    }

    if (homogeneous_generators) {
        for (const auto& [deg, piece] : u.homogeneous_components())
            detail::extract<D>(piece, table, graded_dimension(u.n(), deg), out);
    } else {
        // No degree bound applies; the well-founded glm measure still
        // guarantees termination. The cap is a plain safety valve.
        detail::extract<D>(u, table, boost::multiprecision::cpp_int(10'000'000), out);
    }

    for (auto& [iset, terms] : out.components)
        detail::sort_component_terms<D>(terms);
    return out;
}

/// The multiplication map: sum of expand(r) * expansion(v) over all terms.
template <coefficient_domain D>
polynomial<D> recompose(const decomposition<D>& dec) {
    if (dec.n == 0)
        throw argument_error("recompose: decomposition has no variable count");
    polynomial<D> acc(dec.n);
    for (const auto& [iset, terms] : dec.components)
        for (const auto& t : terms)
            acc += dmonomial_expand<D>(t.r) * t.elem.expand();
    return acc;
}

/// The group action in transversal coordinates: g permutes the cosets of
/// each module element and fixes the d-monomials, so that
/// recompose(equivariance_apply(g, D)) == apply_poly(g, recompose(D)).
template <coefficient_domain D>
decomposition<D> equivariance_apply(const permutation& g, const decomposition<D>& dec) {
    if (dec.n != 0 && g.n() != dec.n)
        throw dimension_error("equivariance_apply: permutation degree mismatch");
    decomposition<D> out;
    out.n = dec.n;
    for (const auto& [iset, terms] : dec.components) {
        auto& new_terms = out.components[iset];
        for (const auto& t : terms) {
            module_element<D> moved{t.elem.spec, {}};
            for (const auto& [j, lambda] : t.elem.coords) {
                const monomial image =
                    apply(compose(g, t.elem.spec->reps[j]), t.elem.spec->leading);
                moved.coords.emplace(t.elem.spec->rep_index(image), lambda);
            }
            new_terms.push_back({t.r, std::move(moved)});
        }
    }
    return out;
}

using int_decomposition = decomposition<integer_domain>;

}  // namespace symdecomp
