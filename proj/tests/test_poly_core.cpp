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

#include <doctest.h>

#include "symdecomp/json_io.hpp"
#include "test_helpers.hpp"

using namespace test_helpers;

TEST_CASE("lex_compare is positional from x1") {
    CHECK(std::is_gt(lex_compare(mono({2, 0}), mono({1, 1}))));
    CHECK(std::is_eq(lex_compare(mono({1, 1}), mono({1, 1}))));
    CHECK(std::is_lt(lex_compare(mono({0, 3, 0}), mono({1, 0, 0}))));
    CHECK_THROWS_AS((void)lex_compare(mono({1}), mono({1, 0})), dimension_error);
}

TEST_CASE("ring operations are exact and purge zeros") {
    CHECK(ip("x1 + x2", 2) * ip("x1*x2", 2) == ip("x1^2*x2 + x1*x2^2", 2));

    const int_polynomial u = ip("3*x1^2 - x2", 2);
    CHECK((u + scale<integer_domain>(-1, u)).is_zero());

    CHECK(ip("x1 + x2", 2) * ip("x1 + x2", 2) == ip("x1^2 + 2*x1*x2 + x2^2", 2));

    CHECK_THROWS_AS((void)(ip("x1", 1) + ip("x1", 2)), dimension_error);
    CHECK_THROWS_AS((void)(ip("x1", 1) * ip("x1", 2)), dimension_error);
}

TEST_CASE("term storage is lex-descending") {
    const int_polynomial u = ip("x3 + x1 + x2^2 + x1^2*x3", 3);
    std::vector<monomial> seen;
    for (const auto& [m, c] : u.terms())
        seen.push_back(m);
    CHECK(std::is_sorted(seen.begin(), seen.end(), lex_greater{}));
    CHECK(lmlex(u) == mono({2, 0, 1}));
}

TEST_CASE("lmlex basics") {
    CHECK(lmlex(ip("x1*x2^2 + x1^2*x2", 2)) == mono({2, 1}));
    CHECK(lmlex(elementary_symmetric<integer_domain>(3, 1)) == mono({1, 0, 0}));
    CHECK_THROWS_AS((void)lmlex(int_polynomial(2)), zero_polynomial_error);
    CHECK_THROWS_AS((void)int_polynomial(2).degree(), zero_polynomial_error);
}

TEST_CASE("lmlex is multiplicative") {
    prng rng(7001);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const int_polynomial u = random_nonzero_polynomial<integer_domain>(rng, n, 6, 8);
        const int_polynomial v = random_nonzero_polynomial<integer_domain>(rng, n, 6, 8);
        REQUIRE(lmlex(u * v) == lmlex(u) * lmlex(v));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric<integer_domain>(2, 1) == ip("x1 + x2", 2));
    CHECK(elementary_symmetric<integer_domain>(3, 2) == ip("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(elementary_symmetric<integer_domain>(3, 3) == ip("x1*x2*x3", 3));
    CHECK(elementary_symmetric<integer_domain>(3, 3).term_count() == 1);

    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i) {
            const auto d = elementary_symmetric<integer_domain>(n, i);
            CHECK(boost::multiprecision::cpp_int(d.term_count()) == binomial(n, i));
            for (const auto& [m, c] : d.terms()) {
                CHECK(c == 1);
                CHECK(m.degree() == i);
            }
        }

    CHECK_THROWS_AS((void)elementary_symmetric<integer_domain>(3, 0), argument_error);
    CHECK_THROWS_AS((void)elementary_symmetric<integer_domain>(3, 4), argument_error);
}

TEST_CASE("ring axioms on sampled polynomials") {
    prng rng(7002);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const int_polynomial a = random_polynomial<integer_domain>(rng, n, 5, 6);
        const int_polynomial b = random_polynomial<integer_domain>(rng, n, 5, 6);
        const int_polynomial c = random_polynomial<integer_domain>(rng, n, 5, 6);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("rational domain arithmetic") {
    using R = rational_domain;
    const auto half = R::from_string("1/2");
    const auto third = R::from_string("1/3");
    CHECK(R::eq(R::add(half, third), R::from_string("5/6")));
    CHECK(R::is_unit(half));
    CHECK(R::eq(R::mul(half, R::unit_inverse(half)), R::one()));

    rat_polynomial u(2);
    u.add_term(mono({1, 0}), half);
    u.add_term(mono({0, 1}), half);
    CHECK(R::eq((u + u).coefficient(mono({1, 0})), R::one()));
}

TEST_CASE("coefficient domains have no zero divisors and sane units") {
    using Z = integer_domain;
    CHECK(Z::is_unit(Z::one()));
    CHECK(!Z::is_unit(Z::zero()));
    CHECK(!Z::is_unit(Z::from_string("2")));
    CHECK(Z::eq(Z::unit_inverse(Z::from_string("-1")), Z::from_string("-1")));
    CHECK_THROWS_AS((void)Z::unit_inverse(Z::from_string("2")), argument_error);
    CHECK_THROWS_AS((void)Z::from_string("12x"), argument_error);
    CHECK_THROWS_AS((void)Z::from_string(""), argument_error);
    CHECK_THROWS_AS((void)rational_domain::from_string("1/0"), argument_error);

    prng rng(7003);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = Z::from_string(std::to_string(rng.int_in(-50, 50)));
        const auto b = Z::from_string(std::to_string(rng.int_in(-50, 50)));
        if (!Z::is_zero(a) && !Z::is_zero(b))
            REQUIRE(!Z::is_zero(Z::mul(a, b)));
    }
}

TEST_CASE("homogeneous times homogeneous is homogeneous of summed degree") {
    prng rng(7004);
    int done = 0;
    while (done < 100) {
        const std::size_t n = 1 + rng.below(4);
        int_polynomial u(n);
        int_polynomial v(n);
        const std::uint64_t du = rng.below(5);
        const std::uint64_t dv = rng.below(5);
        for (int k = 0; k < 4; ++k) {
            std::vector<std::uint64_t> eu(n, 0), ev(n, 0);
            for (std::uint64_t j = 0; j < du; ++j)
                ++eu[rng.below(n)];
            for (std::uint64_t j = 0; j < dv; ++j)
                ++ev[rng.below(n)];
            u.add_term(mono(std::move(eu)), integer_domain::one());
            v.add_term(mono(std::move(ev)), integer_domain::one());
        }
        if (u.is_zero() || v.is_zero())
            continue;
        REQUIRE(u.is_homogeneous());
        REQUIRE(v.is_homogeneous());
        const int_polynomial w = u * v;
        REQUIRE(w.is_homogeneous());
        REQUIRE(w.degree() == du + dv);
        ++done;
    }
}

TEST_CASE("polynomial JSON round trip") {
    const int_polynomial u = ip("3*x1^2*x2 - x3", 3);
    const nlohmann::json j = poly_to_json(u);
    CHECK(j["n"] == 3);
    CHECK(j["terms"][0]["coeff"] == "3");
    CHECK(j["terms"][0]["exps"] == nlohmann::json::array({2, 1, 0}));
    CHECK(j["terms"][1]["coeff"] == "-1");
    CHECK(poly_from_json<integer_domain>(j) == u);

    prng rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const int_polynomial v = random_polynomial<integer_domain>(rng, n, 7);
        REQUIRE(poly_from_json<integer_domain>(poly_to_json(v)) == v);
    }

    CHECK_THROWS_AS((void)poly_from_json<integer_domain>(nlohmann::json::parse("{}")),
                    argument_error);
    CHECK_THROWS_AS((void)poly_from_json<integer_domain>(
                        nlohmann::json::parse(R"({"n":2,"terms":[{"coeff":"1","exps":[1]}]})")),
                    argument_error);
}
