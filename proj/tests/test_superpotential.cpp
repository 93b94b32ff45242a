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
#include <mdt/superpotential.hpp>

using namespace mdt;

namespace {

const std::vector<std::string> cell_vars{"n", "p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"};

Polynomial poly(const char* text) { return parse_polynomial(text, cell_vars); }

} // namespace

TEST_CASE("parsing and canonical words") {
    const Superpotential q = parse_potential("XYZ + XZY");
    CHECK(q.terms().size() == 2);
    const Superpotential w = parse_potential("XYZ - XZY - 1/3 XXX");
    CHECK(w.coefficient({0, 0, 0}) == mpq_class(-1, 3));
    CHECK(w.coefficient({0, 2, 1}) == mpq_class(-1));
    CHECK(parse_potential("YZX") == parse_potential("XYZ"));
    CHECK(parse_potential("ZXY + YZX") == parse_potential("2 XYZ"));
    CHECK(parse_potential("X^3") == parse_potential("XXX"));
    CHECK(parse_potential("XYZ - ZXY").terms().empty());
    CHECK(to_string(w) == "XYZ - XZY - 1/3 XXX");
    CHECK_THROWS_AS(parse_potential("XY +"), Error);
}

TEST_CASE("trace expansion for 1 x 1 matrices") {
    CHECK(trace_expand(parse_potential("XYZ - XZY"), 1).is_zero());
    const Polynomial t = trace_expand(parse_potential("XYZ + XZY"), 1);
    CHECK(to_string(t) == "2*x*y*z");
}

TEST_CASE("trace is invariant under rotating a word") {
    const Polynomial a = trace_expand(parse_potential("XXY + 2 XYZ"), 2);
    const Polynomial b = trace_expand(parse_potential("XYX + 2 ZXY"), 2);
    CHECK(a == b);
    CHECK(trace_expand(parse_potential("XYZ"), 2) + trace_expand(parse_potential("XZY"), 2) ==
          trace_expand(parse_potential("XYZ + XZY"), 2));
}

TEST_CASE("block decomposition reconstructs the trace") {
    for (const char* text : {"XYZ + XZY", "XYZ - XZY - 1/3 XXX", "2 XXX - YYY + 1/2 ZZZ + 3 XYZ + 5 XZY"}) {
        const Polynomial trace = trace_expand(parse_potential(text), 2);
        CHECK(block_decompose(trace).reconstruct() == trace);
    }
}

TEST_CASE("linear coefficients for a general potential") {
    const auto params = potential_params(parse_potential("2 XXX + 3 YYY + 5 ZZZ + 7 XYZ + 11 XZY"));
    CHECK(params.alpha == 2);
    CHECK(params.beta == 3);
    CHECK(params.gamma == 5);
    CHECK(params.delta == 7);
    CHECK(params.epsilon == 11);
    const auto b = block_decompose(trace_expand(parse_potential("2 XXX + 3 YYY + 5 ZZZ + 7 XYZ + 11 XZY"), 2));
    // row q, column p: 3 alpha (n + r)
    CHECK(b.linear[0][0] == poly("6n + 6r"));
    // row q, column t: epsilon w + delta z
    CHECK(b.linear[0][1] == poly("11w + 7z"));
    // row u, column x: epsilon n + delta r
    CHECK(b.linear[1][2] == poly("11n + 7r"));
}

TEST_CASE("cell equations of the two tabulated potentials") {
    const auto q = cell_equations(parse_potential("XYZ + XZY"), 1);
    CHECK(q[2].equation == poly("2rvz + pv + rt + nt + ps"));
    CHECK(q[0].dim() == 10);
    CHECK(q[1].dim() == 9);
    CHECK(q[2].dim() == 8);
    const auto w = cell_equations(parse_potential("XYZ - XZY - 1/3 XXX"), 0);
    CHECK(w[2].equation == poly("-1/3 n^3 - 1/3 r^3 + (v-s)p + (n-r)t"));
    CHECK(w[2].rhs == 0);
}

TEST_CASE("cell equations are homogeneous of weight three") {
    for (const char* text : {"XYZ + XZY", "XYZ - XZY - 1/3 XXX", "XXX + YYY + ZZZ + XYZ - 2 XZY"})
        for (const auto& cell : cell_equations(parse_potential(text), 1))
            CHECK(cell.equation.weighted_degree(cell.weights) == std::optional<unsigned>(3));
}

TEST_CASE("matrix variable names") {
    CHECK(matrix_variables(3, 1) == std::vector<std::string>{"x", "y", "z"});
    CHECK(matrix_variables(3, 2).size() == 12);
}
