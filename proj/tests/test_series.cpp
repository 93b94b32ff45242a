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
#include <mdt/series.hpp>

using namespace mdt;

namespace {

MotiveRatio rat(const char* text) { return parse_motive_ratio(text); }

Series monomial(const char* c, unsigned power, unsigned order, unsigned twist = 0) {
    return Series::monomial(rat(c), power, order, twist);
}

} // namespace

TEST_CASE("twisted product") {
    const unsigned n = 4;
    CHECK(monomial("1", 1, n, 2) * monomial("1", 1, n, 2) == monomial("L^2", 2, n, 2));
    CHECK(monomial("L", 1, n, 2) * monomial("1", 2, n, 2) == monomial("L^5", 3, n, 2));
    const Series one_plus = Series::constant(1, n) + monomial("1", 1, n);
    const Series one_minus = Series::constant(1, n) - monomial("1", 1, n);
    CHECK(one_plus * one_minus == Series::constant(1, n) - monomial("1", 2, n));
    CHECK_THROWS_AS(monomial("1", 1, n, 2) * monomial("1", 1, n, 0), Error);
}

TEST_CASE("geometric fractions") {
    CHECK(geometric_fraction(1, 1, 3) == monomial("1", 1, 3) + monomial("1", 2, 3) + monomial("1", 3, 3));
    CHECK(geometric_fraction(rat("L-1"), 2, 5) == monomial("L-1", 2, 5) + monomial("L-1", 4, 5));
    CHECK(geometric_fraction(rat("L Mt/(L-1)"), 1, 2) == monomial("L Mt/(L-1)", 1, 2) + monomial("L Mt/(L-1)", 2, 2));
}

TEST_CASE("plethystic exponential") {
    CHECK(pleth_exp(Series(3), 3) == Series::constant(1, 3));
    // prod (1 - t^m)^{-1}: number of partitions
    const Series p = pleth_exp(geometric_fraction(1, 1, 3), 3);
    CHECK(p[1] == MotiveRatio(1));
    CHECK(p[2] == MotiveRatio(2));
    CHECK(p[3] == MotiveRatio(3));
    // prod (1 - L t^{2m})^{-1}: t^4 collects (L t^2)^2 and L t^4
    CHECK(pleth_exp(geometric_fraction(rat("L"), 2, 4), 4)[4] == rat("L^2+L"));
    CHECK(pleth_exp(parse_series("(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)", 2), 2)[2] ==
          rat("(L^4+3L^3-2L^2-2L+1)/((L^2-1)(L-1))"));
    CHECK(pleth_exp(parse_series("L*Mt/(L-1)*t/(1-t)", 2), 2)[2] ==
          rat("(L^3(L-1)+Mt L(L^2-1)+Mt2 L^2)/((L^2-1)(L-1))"));
    CHECK_THROWS_AS(pleth_exp(parse_series("Mt*t", 3), 3), Error);
}

TEST_CASE("plethystic logarithm") {
    CHECK(pleth_log(Series::constant(1, 4), 4) == Series(4));
    CHECK(pleth_log(pleth_exp(geometric_fraction(1, 1, 5), 5), 5) == geometric_fraction(1, 1, 5));
    const Series u = Series::constant(1, 2) + monomial("(2L-1)/(L-1)", 1, 2) +
                     monomial("(L^4+3L^3-2L^2-2L+1)/((L^2-1)(L-1))", 2, 2);
    CHECK(pleth_log(u, 2) == geometric_fraction(rat("(2L-1)/(L-1)"), 1, 2) + monomial("L-1", 2, 2));
}

TEST_CASE("Exp and Log are inverse to order 5 on tag-free brackets") {
    const char* brackets[] = {"L*t", "(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)", "t^2 - 3L^2*t^3 + 1/(L+1)*t^5",
                              "-L^(1/2)*t/(1-t)", "(L^3-1)/(L-1)*t + L^-2*t^4"};
    for (const char* text : brackets) {
        const Series f = parse_series(text, 5);
        CHECK(pleth_log(pleth_exp(f, 5), 5) == f);
    }
}

TEST_CASE("product form agrees with the recursion after truncation") {
    const std::int64_t lmin = -3;
    const char* brackets[] = {"L/(L-1)*t", "(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)", "L^2*t + t^2"};
    for (const char* text : brackets) {
        const Series f = parse_series(text, 3);
        CHECK(exp_product_form(f, 3, lmin) == lefschetz_truncation(pleth_exp(f, 3), lmin));
    }
}

TEST_CASE("conjecture normalization round trip") {
    const MotiveRatio b = rat("(2L-1)/(L-1)");
    CHECK(from_conjecture_normalization(to_conjecture_normalization(b)) == b);
}

TEST_CASE("series printing") {
    CHECK(to_string(geometric_fraction(rat("L-1"), 2, 3)) == "(L - 1)*t^2 + O(t^4)");
}
