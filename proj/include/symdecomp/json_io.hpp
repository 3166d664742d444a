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

#include <json.hpp>
#include <string>

#include "symdecomp/decompose.hpp"
#include "symdecomp/oracle.hpp"
#include "symdecomp/permutation.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

// Polynomial form: {"n": 3, "terms": [{"coeff": "3", "exps": [2,1,0]}, ...]},
// terms lex-descending, coefficients as decimal strings. Bit-exact and
// round-trippable.
template <coefficient_domain D>
nlohmann::json poly_to_json(const polynomial<D>& u) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : u.terms())
        terms.push_back({{"coeff", D::to_string(c)}, {"exps", m.exps()}});
    return {{"n", u.n()}, {"terms", std::move(terms)}};
}

template <coefficient_domain D>
polynomial<D> poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw argument_error("polynomial JSON: expected {\"n\": ..., \"terms\": [...]}");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw argument_error("polynomial JSON: n must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    polynomial<D> out(n);
    if (!j["terms"].is_array())
        throw argument_error("polynomial JSON: terms must be an array");
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps") ||
            !term["coeff"].is_string() || !term["exps"].is_array() || term["exps"].size() != n)
            throw argument_error("polynomial JSON: malformed term");
        std::vector<std::uint64_t> exps;
        exps.reserve(n);
        for (const auto& e : term["exps"]) {
            if (!e.is_number_unsigned())
                throw argument_error("polynomial JSON: exponents must be nonnegative integers");
            exps.push_back(e.get<std::uint64_t>());
        }
        out.add_term(monomial(std::move(exps)), D::from_string(term["coeff"].get<std::string>()));
    }
    return out;
}

nlohmann::json perm_to_json(const permutation& g);
permutation perm_from_json(const nlohmann::json& j);

// Decomposition form:
// {"n": 2, "components": [{"I": [1,2],
//   "terms": [{"d_exps": {"1": 1}, "coords": [{"rep": 0, "coeff": "1"}]}]}, ...]}
// where "rep" indexes the module basis ordering. The form assumes the default
// generators e_I'; non-default generator tables are not serialized.
template <coefficient_domain D>
nlohmann::json decomposition_to_json(const decomposition<D>& dec) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& [iset, terms] : dec.components) {
        nlohmann::json jterms = nlohmann::json::array();
        for (const auto& t : terms) {
            nlohmann::json d_exps = nlohmann::json::object();
            for (const auto& [i, power] : t.r.powers())
                d_exps[std::to_string(i)] = power;
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& [rep, c] : t.elem.coords)
                coords.push_back({{"rep", rep}, {"coeff", D::to_string(c)}});
            jterms.push_back({{"d_exps", std::move(d_exps)}, {"coords", std::move(coords)}});
        }
        components.push_back({{"I", iset.members()}, {"terms", std::move(jterms)}});
    }
    return {{"n", dec.n}, {"components", std::move(components)}};
}

template <coefficient_domain D>
decomposition<D> decomposition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("components") ||
        !j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0 ||
        !j["components"].is_array())
        throw argument_error("decomposition JSON: expected {\"n\": ..., \"components\": [...]}");
    decomposition<D> dec;
    dec.n = j["n"].get<std::size_t>();
    generator_table<D> table;
    for (const auto& comp : j["components"]) {
        if (!comp.is_object() || !comp.contains("I") || !comp.contains("terms") ||
            !comp["I"].is_array() || !comp["terms"].is_array())
            throw argument_error("decomposition JSON: malformed component");
        index_set iset(dec.n, comp["I"].get<std::vector<std::size_t>>());
        auto spec = detail::spec_for<D>(table, iset);
        auto& terms = dec.components[iset];
        if (!terms.empty())
            throw argument_error("decomposition JSON: duplicate component " + iset.to_string());
        for (const auto& jterm : comp["terms"]) {
            if (!jterm.is_object() || !jterm.contains("d_exps") || !jterm.contains("coords") ||
                !jterm["d_exps"].is_object() || !jterm["coords"].is_array())
                throw argument_error("decomposition JSON: malformed term");
            std::map<std::size_t, std::uint64_t> powers;
            for (auto it = jterm["d_exps"].begin(); it != jterm["d_exps"].end(); ++it) {
                if (!it.value().is_number_unsigned())
                    throw argument_error("decomposition JSON: d-exponent must be a "
                                         "nonnegative integer");
                std::size_t key = 0;
                try {
                    key = static_cast<std::size_t>(std::stoull(it.key()));
                } catch (const std::exception&) {
                    throw argument_error("decomposition JSON: d-exponent key is not an index");
                }
                powers[key] = it.value().template get<std::uint64_t>();
            }
            module_element<D> elem{spec, {}};
            for (const auto& jc : jterm["coords"]) {
                if (!jc.is_object() || !jc.contains("rep") || !jc.contains("coeff") ||
                    !jc["rep"].is_number_unsigned() || !jc["coeff"].is_string())
                    throw argument_error("decomposition JSON: malformed coordinate");
                const std::size_t rep = jc["rep"].get<std::size_t>();
                if (rep >= spec->dimension())
                    throw argument_error("decomposition JSON: rep index out of range");
                auto c = D::from_string(jc["coeff"].get<std::string>());
                if (D::is_zero(c))
                    throw argument_error("decomposition JSON: zero coordinate stored");
                if (!elem.coords.emplace(rep, std::move(c)).second)
                    throw argument_error("decomposition JSON: duplicate rep index");
            }
            if (elem.coords.empty())
                throw argument_error("decomposition JSON: empty module element");
            d_monomial r(iset, std::move(powers));
            for (const auto& existing : terms)
                if (existing.r == r)
                    throw argument_error("decomposition JSON: duplicate d-monomial in component");
            terms.push_back({std::move(r), std::move(elem)});
        }
        detail::sort_component_terms<D>(terms);
    }
    return dec;
}

nlohmann::json graded_report_to_json(const graded_report& r);
nlohmann::json series_report_to_json(const series_report& r);
nlohmann::json audit_report_to_json(const audit_report& r);
nlohmann::json roundtrip_report_to_json(const roundtrip_report& r);

}  // namespace symdecomp
