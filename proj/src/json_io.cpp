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

#include "symdecomp/json_io.hpp"

namespace symdecomp {

nlohmann::json perm_to_json(const permutation& g) {
    return {{"images", g.images()}};
}

permutation perm_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
        throw argument_error("permutation JSON: expected {\"images\": [...]}");
    return permutation(j["images"].get<std::vector<std::size_t>>());
}

nlohmann::json graded_report_to_json(const graded_report& r) {
    nlohmann::json j{{"n", r.n},
                     {"degree", r.degree},
                     {"expected_dim", r.expected_dim.str()},
                     {"candidate_count", r.candidate_count},
                     {"rank", r.rank},
                     {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass) {
        j["failure_kind"] = r.failure_kind;
        nlohmann::json witness = nlohmann::json::array();
        for (const auto& [label, coeff] : r.witness)
            witness.push_back({{"candidate", label}, {"coeff", coeff}});
        j["witness"] = std::move(witness);
    }
    return j;
}

nlohmann::json series_report_to_json(const series_report& r) {
    nlohmann::json lhs = nlohmann::json::array();
    nlohmann::json rhs = nlohmann::json::array();
    for (const auto& c : r.lhs)
        lhs.push_back(c.str());
    for (const auto& c : r.rhs)
        rhs.push_back(c.str());
    nlohmann::json j{{"n", r.n},
                     {"max_degree", r.max_degree},
                     {"lhs", std::move(lhs)},
                     {"rhs", std::move(rhs)},
                     {"status", r.pass ? "pass" : "fail"}};
    if (r.first_mismatch.has_value())
        j["first_mismatch"] = *r.first_mismatch;
    return j;
}

nlohmann::json audit_report_to_json(const audit_report& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"I", e.iset.members()},
                           {"formula_dim", e.formula_dim},
                           {"transversal_length", e.transversal_length},
                           {"match", e.match}});
    return {{"n", r.n}, {"entries", std::move(entries)}, {"status", r.pass ? "pass" : "fail"}};
}

nlohmann::json roundtrip_report_to_json(const roundtrip_report& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial}, {"input", f.input_text}});
    return {{"n", r.n},
            {"max_degree", r.max_degree},
            {"trials", r.trials},
            {"seed", r.seed},
            {"prng", r.prng_name},
            {"failures", std::move(failures)},
            {"status", r.pass ? "pass" : "fail"}};
}

}  // namespace symdecomp
