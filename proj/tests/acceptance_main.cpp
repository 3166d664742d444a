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

// Acceptance suite. Every check is exact: integer arithmetic throughout, no
// tolerance parameters anywhere. One line per criterion; exit 0 only when all
// pass.

#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "symdecomp/decompose.hpp"
#include "symdecomp/json_io.hpp"
#include "symdecomp/oracle.hpp"
#include "symdecomp/parser.hpp"
#include "symdecomp/reduction.hpp"
#include "symdecomp/rng.hpp"

using namespace symdecomp;
using boost::multiprecision::cpp_int;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty())
            detail = why;
    }
};

bool same_class(const monomial& a, const monomial& b) {
    return canonical(a) == canonical(b);
}

bool set_in_class_of(const std::vector<monomial>& xs, const monomial& m) {
    if (xs.empty())
        return false;
    return std::all_of(xs.begin(), xs.end(),
                       [&](const monomial& x) { return same_class(x, m); });
}

// ---------------------------------------------------------------------------
// 1. Structure-theorem bijectivity per graded piece.

outcome criterion_graded_bijectivity() {
    outcome result;
    std::size_t checks = 0;
    auto run = [&](std::size_t n, std::uint64_t max_degree) {
        for (std::uint64_t d = 0; d <= max_degree; ++d) {
            const graded_report r = graded_basis_check(n, d);
            ++checks;
            if (!r.pass)
                result.fail("n=" + std::to_string(n) + " degree=" + std::to_string(d) + ": " +
                            r.failure_kind);
        }
    };
    for (std::size_t n = 1; n <= 4; ++n)
        run(n, 10);
    run(5, 8);
    if (result.pass)
        result.detail = std::to_string(checks) + " graded checks, count = rank = dim";
    return result;
}

// ---------------------------------------------------------------------------
// 2. Hilbert series identity.

outcome criterion_hilbert() {
    outcome result;
    for (std::size_t n = 1; n <= 6; ++n) {
        const series_report r = hilbert_check(n, 20);
        if (!r.pass)
            result.fail("n=" + std::to_string(n) + " first mismatch at degree " +
                        std::to_string(r.first_mismatch.value_or(0)));
    }
    const series_report two = hilbert_check(2, 20);
    for (std::size_t d = 0; d <= 5; ++d)
        if (two.lhs[d] != cpp_int(d + 1))
            result.fail("n=2 coefficient list is not 1,2,3,4,5,6");
    const series_report three = hilbert_check(3, 20);
    const std::vector<cpp_int> head{1, 3, 6, 10};
    for (std::size_t d = 0; d < head.size(); ++d)
        if (three.lhs[d] != head[d])
            result.fail("n=3 coefficient list is not 1,3,6,10");
    if (result.pass)
        result.detail = "n <= 6 to degree 20, both series agree";
    return result;
}

// ---------------------------------------------------------------------------
// 3. Dimension formula against enumerated transversals.

outcome criterion_dimensions() {
    outcome result;
    for (std::size_t n = 1; n <= 7; ++n) {
        const audit_report r = dimension_audit(n);
        if (!r.pass)
            result.fail("audit failed at n=" + std::to_string(n));
    }
    const audit_report three = dimension_audit(3);
    std::vector<std::uint64_t> dims;
    for (const audit_entry& e : three.entries)
        dims.push_back(e.formula_dim);
    if (dims != std::vector<std::uint64_t>{1, 3, 3, 6})
        result.fail("n=3 spot values are not 1, 3, 3, 6");
    if (result.pass)
        result.detail = "every I with n <= 7; n=3 spot values 1, 3, 3, 6";
    return result;
}

// ---------------------------------------------------------------------------
// 4. Round trip, plus the closed-form decomposition of x1^2.

outcome criterion_roundtrip() {
    outcome result;
    for (std::size_t n = 2; n <= 4; ++n) {
        const roundtrip_report r = roundtrip_suite(n, 8, 1000, 1000 + n);
        if (!r.pass)
            result.fail("n=" + std::to_string(n) + ": " + std::to_string(r.failures.size()) +
                        " of " + std::to_string(r.trials) + " failed (seed " +
                        std::to_string(r.seed) + ")");
    }
    const int_polynomial u = parse_polynomial<integer_domain>("x1^2", 2);
    const nlohmann::json got = decomposition_to_json(decompose(u));
    const nlohmann::json want = nlohmann::json::parse(
        R"({"n":2,"components":[
             {"I":[1,2],"terms":[{"d_exps":{"1":1},"coords":[{"rep":0,"coeff":"1"}]}]},
             {"I":[2],"terms":[{"d_exps":{"2":1},"coords":[{"rep":0,"coeff":"-1"}]}]}]})");
    if (got != want)
        result.fail("decompose(x1^2) is not d1 (x) x1 - d2 (x) 1");
    if (result.pass)
        result.detail = "3000 random round trips exact; closed form matches";
    return result;
}

// ---------------------------------------------------------------------------
// 5. Lemma suites, 500 seeded trials each at n <= 5.

using spec_ptr = std::shared_ptr<const generator_spec<integer_domain>>;

spec_ptr cached_default(std::map<index_set, spec_ptr>& cache, const index_set& iset) {
    auto it = cache.find(iset);
    if (it != cache.end())
        return it->second;
    auto spec = std::make_shared<const generator_spec<integer_domain>>(
        default_generator<integer_domain>(iset));
    cache.emplace(iset, spec);
    return spec;
}

outcome lemma_suite(const char* name, std::uint64_t seed,
                    const std::function<bool(prng&, std::size_t)>& property) {
    outcome result;
    prng rng(seed);
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        if (!property(rng, n))
            ++failures;
    }
    if (failures != 0)
        result.fail(std::string(name) + ": " + std::to_string(failures) +
                    "/500 trials failed (seed " + std::to_string(seed) + ")");
    return result;
}

outcome criterion_lemma_suites() {
    outcome result;
    std::map<index_set, spec_ptr> cache;

    auto merge = [&](const outcome& sub) {
        if (!sub.pass)
            result.fail(sub.detail);
    };

    auto full_set = [](std::size_t n) {
        std::vector<std::size_t> members(n);
        for (std::size_t i = 0; i < n; ++i)
            members[i] = i + 1;
        return index_set(n, members);
    };

    // Leading monomials are multiplicative.
    merge(lemma_suite("lmlex multiplicativity", 501, [](prng& rng, std::size_t n) {
        const auto u = random_nonzero_polynomial<integer_domain>(rng, n, 8);
        const auto v = random_nonzero_polynomial<integer_domain>(rng, n, 8);
        return lmlex(u * v) == lmlex(u) * lmlex(v);
    }));

    // A d-monomial's leading set is the full orbit of its leading monomial.
    merge(lemma_suite("glm of d-monomials", 502, [&](prng& rng, std::size_t n) {
        const d_monomial r = random_d_monomial(rng, full_set(n), 2);
        const int_polynomial d = dmonomial_expand<integer_domain>(r);
        return glm(d) == orbit(lmlex(d)) && set_in_class_of(glm(d), lmlex(d));
    }));

    // The class of the leading set is invariant under the action.
    merge(lemma_suite("glm class invariance", 503, [](prng& rng, std::size_t n) {
        const auto u = random_nonzero_polynomial<integer_domain>(rng, n, 8);
        const permutation g = random_permutation(rng, n);
        return same_class(glm(u).front(), glm(apply_poly(g, u)).front());
    }));

    // glm(u) = Gm intersected with the support.
    merge(lemma_suite("glm orbit-support identity", 504, [](prng& rng, std::size_t n) {
        const auto u = random_nonzero_polynomial<integer_domain>(rng, n, 8);
        const std::vector<monomial> lead = glm(u);
        const std::vector<monomial> orb = orbit(lead.front());
        std::vector<monomial> expected;
        for (const monomial& m : support(u))
            if (std::find(orb.begin(), orb.end(), m) != orb.end())
                expected.push_back(m);
        return lead == expected;
    }));

    // Additivity over disjoint leading sets.
    merge(lemma_suite("glm additivity", 505, [](prng& rng, std::size_t n) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            const auto u = random_nonzero_polynomial<integer_domain>(rng, n, 6);
            const auto v = random_nonzero_polynomial<integer_domain>(rng, n, 6);
            const auto gu = glm(u);
            const auto gv = glm(v);
            bool disjoint = true;
            for (const monomial& m : gu)
                disjoint = disjoint && std::find(gv.begin(), gv.end(), m) == gv.end();
            if (!disjoint)
                continue;
            const auto gsum = glm(u + v);
            if (gsum.empty())
                return false;
            for (const monomial& m : gsum)
                if (std::find(gu.begin(), gu.end(), m) == gu.end() &&
                    std::find(gv.begin(), gv.end(), m) == gv.end())
                    return false;
            return same_class(gsum.front(), gu.front()) ||
                   same_class(gsum.front(), gv.front());
        }
        return true;  // no disjoint pair found; vacuous trial
    }));

    // glm commutes with the action element-wise.
    merge(lemma_suite("glm equivariance", 506, [](prng& rng, std::size_t n) {
        const auto u = random_nonzero_polynomial<integer_domain>(rng, n, 8);
        const permutation g = random_permutation(rng, n);
        std::vector<monomial> moved;
        for (const monomial& m : glm(u))
            moved.push_back(apply(g, m));
        std::sort(moved.begin(), moved.end(), lex_greater{});
        return glm(apply_poly(g, u)) == moved;
    }));

    // Nonzero module elements lead in the class of the staircase monomial.
    merge(lemma_suite("module element leading class", 507, [&](prng& rng, std::size_t n) {
        const index_set iset = random_index_set(rng, n);
        const auto elem = random_module_element<integer_domain>(rng, cached_default(cache, iset));
        const int_polynomial u = elem.expand();
        return !u.is_zero() && set_in_class_of(glm(u), e_prime(iset));
    }));

    // Multiplying by a d_I-monomial shifts the class by its leading monomial.
    merge(lemma_suite("d-multiple leading class", 508, [&](prng& rng, std::size_t n) {
        const index_set iset = random_index_set(rng, n);
        const d_monomial r = random_d_monomial(rng, iset, 2);
        const auto elem = random_module_element<integer_domain>(rng, cached_default(cache, iset));
        const int_polynomial du = dmonomial_expand<integer_domain>(r) * elem.expand();
        return set_in_class_of(glm(du), r.lmlex_in_s() * e_prime(iset));
    }));

    // Equal reduced forms exactly capture equivalent exponent comparisons.
    merge(lemma_suite("reduced-form biconditional", 509, [](prng& rng, std::size_t n) {
        const monomial m = random_monomial(rng, n, 6);

        std::vector<std::uint64_t> values(m.exps());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::map<std::uint64_t, std::uint64_t> image;
        std::uint64_t next = rng.below(3);
        for (std::uint64_t v : values) {
            image[v] = next;
            next += 1 + rng.below(4);
        }
        std::vector<std::uint64_t> remapped(m.n());
        for (std::size_t i = 0; i < m.n(); ++i)
            remapped[i] = image[m.exps()[i]];
        if (!(reduce(m) == reduce(monomial(remapped))))
            return false;

        const monomial s = random_monomial(rng, n, 6);
        bool equivalent = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                equivalent = equivalent && ((m.exps()[i] > m.exps()[j]) ==
                                            (s.exps()[i] > s.exps()[j]));
        return (reduce(m) == reduce(s)) == equivalent;
    }));

    // Reduction commutes with the action.
    merge(lemma_suite("reduction equivariance", 510, [](prng& rng, std::size_t n) {
        const monomial m = random_monomial(rng, n, 6);
        const permutation g = random_permutation(rng, n);
        return reduce(apply(g, m)) == apply(g, reduce(m));
    }));

    // Reduction of staircase multiples returns the staircase.
    merge(lemma_suite("reduction stability", 511, [](prng& rng, std::size_t n) {
        const index_set iset = random_index_set(rng, n);
        const d_monomial r = random_d_monomial(rng, iset, 2);
        const monomial e = e_prime(iset);
        if (!(reduce(r.lmlex_in_s() * e) == e))
            return false;
        // Single-step version on a polynomial led by such a monomial.
        const monomial w = r.lmlex_in_s() * e;
        int_polynomial u(w, integer_domain::one());
        for (int extra = 0; extra < 3; ++extra) {
            const monomial cand = random_monomial(rng, n, w.degree());
            if (std::is_lt(lex_compare(cand, w)))
                u.add_term(cand, integer_domain::one());
        }
        for (std::size_t t : iset.members()) {
            const int_polynomial dtu = elementary_symmetric<integer_domain>(n, t) * u;
            if (!(reduce(lmlex(dtu)) == e))
                return false;
        }
        return true;
    }));

    // Distinct d-monomial multiples of V_I meet only in zero, seen through
    // the leading-class fingerprint.
    merge(lemma_suite("disjointness fingerprint", 512, [&](prng& rng, std::size_t n) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            const index_set iset = random_index_set(rng, n);
            auto spec = cached_default(cache, iset);
            const d_monomial r = random_d_monomial(rng, iset, 2);
            std::vector<d_monomial> others;
            for (int k = 0; k < 4 && others.size() < 2; ++k) {
                const d_monomial cand = random_d_monomial(rng, iset, 2);
                bool fresh = !(cand == r);
                for (const auto& o : others)
                    fresh = fresh && !(o == cand);
                if (fresh)
                    others.push_back(cand);
            }
            if (others.empty())
                continue;
            const int_polynomial ru =
                dmonomial_expand<integer_domain>(r) *
                random_module_element<integer_domain>(rng, spec).expand();
            int_polynomial sum(n);
            for (const auto& ri : others)
                sum += dmonomial_expand<integer_domain>(ri) *
                       random_module_element<integer_domain>(rng, spec).expand();
            if (ru.is_zero() || sum.is_zero())
                return false;
            return !same_class(glm(ru).front(), glm(sum).front());
        }
        return true;
    }));

    if (result.pass)
        result.detail = "12 suites x 500 trials, zero failures";
    return result;
}

// ---------------------------------------------------------------------------
// 6. Reduction ground truth.

outcome criterion_reduction_ground_truth() {
    outcome result;
    if (!(reduce(monomial({0, 2, 3})) == monomial({0, 1, 2})))
        result.fail("reduce(x2^2*x3^3) != x2*x3^2");
    const reduced_classification cls = classify_reduced(monomial({0, 1, 2}));
    if (cls.g.images() != std::vector<std::size_t>{3, 2, 1})
        result.fail("classification permutation is not (1 3)");
    if (cls.iset.members() != std::vector<std::size_t>{1, 2, 3})
        result.fail("classification index set is not {1,2,3}");
    // Erratum: the value x1^2*x2^2*x3 is sometimes quoted for this input;
    // rank compression of (4,4,1) has two distinct values and yields (1,1,0).
    if (!(reduce(monomial({4, 4, 1})) == monomial({1, 1, 0})))
        result.fail("reduce(x1^4*x2^4*x3) != x1*x2");
    if (result.pass)
        result.detail = "worked example and erratum case both match the definition";
    return result;
}

// ---------------------------------------------------------------------------
// 7. Canonical form against exhaustive orbit maxima.

outcome criterion_canonical_oracle() {
    outcome result;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        // All permutations of {1..n}, once per n.
        std::vector<permutation> group;
        {
            std::vector<std::size_t> img(n);
            for (std::size_t i = 0; i < n; ++i)
                img[i] = i + 1;
            do {
                group.emplace_back(img);
            } while (std::next_permutation(img.begin(), img.end()));
        }
        for (std::uint64_t d = 0; d <= 6; ++d) {
            for (const monomial& m : monomial_basis(n, d)) {
                monomial best = m;
                for (const permutation& g : group) {
                    const monomial image = apply(g, m);
                    if (std::is_gt(lex_compare(image, best)))
                        best = image;
                }
                ++checked;
                if (!(canonical(m).canonical_form == best)) {
                    result.fail("mismatch at n=" + std::to_string(n) + ", " +
                                render_monomial(m));
                    return result;
                }
            }
        }
    }
    result.detail = std::to_string(checked) + " monomials, exhaustive over the group";
    return result;
}

// ---------------------------------------------------------------------------
// 8. Equivariance of the decomposition map.

outcome criterion_equivariance() {
    outcome result;
    prng rng(801);
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const int_polynomial u = random_polynomial<integer_domain>(rng, n, 6);
        const permutation g = random_permutation(rng, n);
        if (!(decompose(apply_poly(g, u)) == equivariance_apply(g, decompose(u))))
            ++failures;
    }
    if (failures != 0)
        result.fail(std::to_string(failures) + "/500 trials failed (seed 801)");
    else
        result.detail = "500 seeded (g, u) pairs at n <= 4";
    return result;
}

// ---------------------------------------------------------------------------
// 9. Parser round trip and fuzzing.

outcome criterion_parser() {
    outcome result;
    prng rng(901);
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const int_polynomial u = random_polynomial<integer_domain>(rng, n, 8);
        if (!(parse_polynomial<integer_domain>(render_polynomial(u), n) == u)) {
            result.fail("round trip failed at trial " + std::to_string(trial));
            break;
        }
    }
    const std::string alphabet = "x0123456789+-*^ ()\t{}d,./\\^^**";
    std::size_t diagnostics = 0;
    for (std::size_t trial = 0; trial < 10000; ++trial) {
        std::string text;
        const std::size_t len = rng.below(40);
        for (std::size_t k = 0; k < len; ++k) {
            if (rng.below(4) == 0)
                text.push_back(static_cast<char>(rng.below(256)));
            else
                text.push_back(alphabet[rng.below(alphabet.size())]);
        }
        const std::size_t n = 1 + rng.below(5);
        try {
            (void)parse_polynomial<integer_domain>(text, n);
        } catch (const parse_error& e) {
            ++diagnostics;
            if (e.offset > text.size()) {
                result.fail("diagnostic offset out of range");
                break;
            }
        } catch (...) {
            result.fail("parser escaped with a foreign exception");
            break;
        }
    }
    if (result.pass)
        result.detail = "1000 round trips; 10000 fuzz inputs, " +
                        std::to_string(diagnostics) + " clean diagnostics, no crashes";
    return result;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
        {"structure-theorem bijectivity per degree", criterion_graded_bijectivity},
        {"hilbert series identity", criterion_hilbert},
        {"dimension formula vs transversals", criterion_dimensions},
        {"decompose/recompose round trip", criterion_roundtrip},
        {"lemma property suites", criterion_lemma_suites},
        {"reduction ground truth", criterion_reduction_ground_truth},
        {"canonical form vs exhaustive orbit maxima", criterion_canonical_oracle},
        {"equivariance of decomposition", criterion_equivariance},
        {"parser round trip and fuzzing", criterion_parser},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        outcome result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && result.pass;
        std::cout << "criterion " << (i + 1) << " [" << criteria[i].first
                  << "]: " << (result.pass ? "PASS" : "FAIL");
        if (!result.detail.empty())
            std::cout << " — " << result.detail;
        std::cout << "\n" << std::flush;
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed"
                           : "ACCEPTANCE: criteria failed")
              << "\n";
    return all_pass ? 0 : 1;
}
