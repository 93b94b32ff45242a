/*
 * Copyright 2026 The motivic-dt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <mdt/error.hpp>
#include <mdt/expression.hpp>

using namespace mdt;

TEST_CASE("motive expressions") {
    CHECK(parse_motive("(L-1)^2") == parse_motive("L^2 - 2L + 1"));
    CHECK(parse_motive("L^(1/2) L^(1/2)") == MotiveClass::lefschetz());
    CHECK(parse_motive("L^(-1/2)") == MotiveClass::lefschetz_half(-1));
    CHECK(parse_motive("mu3") == MotiveClass::mu3());
    CHECK(parse_motive("Mt*Mt") == MotiveClass::mtilde_squared());
    CHECK(parse_motive("2 L^3 - L^-1") == MotiveClass::monomial(6, EquivTag::unit, 2) - MotiveClass::lefschetz(-1));
}

TEST_CASE("ratios") {
    CHECK(parse_motive_ratio("(2L-1)/(L-1)").denominator() == parse_motive("L-1"));
    CHECK_THROWS_AS(parse_motive("1/(L-1)"), Error);
    CHECK_THROWS_AS(parse_motive_ratio("1/0"), Error);
}

TEST_CASE("parse errors carry a position") {
    try {
        (void)parse_motive("L + * 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_motive("(L-1"), ParseError);
    CHECK_THROWS_AS(parse_motive("L^x"), ParseError);
    CHECK_THROWS_AS(parse_motive("Q"), ParseError);
}

TEST_CASE("series expressions") {
    const Series s = parse_series("t/(1-t)", 3);
    for (unsigned k = 1; k <= 3; ++k) CHECK(s[k] == MotiveRatio(1));
    const Series e = parse_series("(L-1)*t^2/(1-t^2)", 4);
    CHECK(e[2] == parse_motive_ratio("L-1"));
    CHECK(e[3] == MotiveRatio(0));
    CHECK(e[4] == parse_motive_ratio("L-1"));
}

TEST_CASE("polynomial expressions") {
    const std::vector<std::string> vars{"n", "r", "s", "z"};
    const Polynomial p = parse_polynomial("-1/3 n^3 + (n-r)s", vars);
    CHECK(p.total_degree() == 3);
    CHECK(p.evaluate({{"n", 3}, {"r", 1}, {"s", 2}, {"z", 0}}) == mpq_class(-5));
    CHECK(to_string(parse_polynomial("-1/3 n^3", vars)) == "-1/3*n^3");
    CHECK_THROWS_AS(parse_polynomial("q", vars), Error);
}
