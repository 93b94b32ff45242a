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
#include <mdt/counting.hpp>

using namespace mdt;

namespace {

// Independent oracle: count {f = lambda} over F_q^k by direct enumeration.
template <class F>
std::uint64_t brute(unsigned k, std::uint64_t q, F f) {
    std::vector<std::uint64_t> x(k, 0);
    std::uint64_t hits = 0;
    while (true) {
        if (f(x)) ++hits;
        unsigned i = 0;
        while (i < k && ++x[i] == q) x[i++] = 0;
        if (i == k) return hits;
    }
}

StratumSpec spec_of(std::vector<std::string> vars, const char* equation) {
    StratumSpec s;
    s.name = equation;
    s.variables = vars;
    s.equation = parse_polynomial(equation, vars);
    for (const auto& v : vars) s.weights[v] = 1;
    return s;
}

const Superpotential quantum = parse_potential("XYZ + XZY");
const Superpotential weyl = parse_potential("XYZ - XZY - 1/3 XXX");

} // namespace

TEST_CASE("primality and cube roots") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(cube_roots_of_unity(7) == 3);
    CHECK(cube_roots_of_unity(5) == 1);
    CHECK(cube_roots_of_unity(2) == 1);
}

TEST_CASE("small loci against direct enumeration") {
    const auto s = spec_of({"x", "y", "z"}, "2xyz");
    CHECK(count_points(s, 5, 1).count == brute(3, 5, [](auto& v) { return 2 * v[0] * v[1] * v[2] % 5 == 1; }));
    CHECK(count_points(s, 5, 1).count == 16);
    const auto g = spec_of({"y", "v", "b", "g", "f", "c"}, "yv+bg+fc");
    for (std::uint64_t q : {2u, 5u, 7u}) {
        const auto want = brute(6, q, [q](auto& v) { return (v[0] * v[1] + v[2] * v[3] + v[4] * v[5]) % q == 0; });
        CHECK(count_points(g, q, 0).count == want);
        CHECK(mpz_class(want) == (q - 1) * (q * q + 1) * (q * q + q + 1) + 1);
    }
    const auto cube = spec_of({"x", "y", "z"}, "x^3");
    CHECK(count_points(cube, 7, 0).count == 49);
}

TEST_CASE("linear elimination agrees with naive enumeration") {
    const auto q = cell_equations(quantum, 1);
    const auto w = cell_equations(weyl, 1);
    for (std::uint64_t p : {2u, 5u}) {
        CHECK(count_points(q[2], p, 1).count == count_naive(q[2], p, 1));
        CHECK(count_points(w[2], p, 1).count == count_naive(w[2], p, 1));
        CHECK(count_points(q[2], p, 0).count == count_naive(q[2], p, 0));
    }
    CHECK(count_points(w[1], 2, 1).count == count_naive(w[1], 2, 1));
}

TEST_CASE("shard count does not change the result") {
    const auto q = cell_equations(quantum, 1);
    CHECK(count_points(q[0], 5, 1, {1, {}}).count == count_points(q[0], 5, 1, {4, {}}).count);
    CHECK(count_fiber_n2(weyl, 7, 2, 1).count == count_fiber_n2(weyl, 7, 2, 3).count);
}

TEST_CASE("fiber counts for 1 x 1 matrices") {
    for (std::uint64_t q : {5u, 7u}) {
        for (std::uint64_t lambda = 0; lambda < q; ++lambda) {
            const auto want = brute(3, q, [q, lambda](auto& v) { return 2 * v[0] * v[1] * v[2] % q == lambda; });
            CHECK(count_fiber(quantum, 1, q, lambda).count == want);
            // -x^3/3 = lambda  <=>  x^3 = -3 lambda
            const std::uint64_t target = (q - 3 * lambda % q) % q;
            const auto roots = brute(1, q, [q, target](auto& v) { return v[0] * v[0] % q * v[0] % q == target; });
            CHECK(count_fiber(weyl, 1, q, lambda).count == roots * q * q);
        }
    }
}

TEST_CASE("rank formula for 2 x 2 fibers agrees with the generic path") {
    CHECK(count_fiber_n2(quantum, 3, 1).count == count_points(fiber_spec(quantum, 2, 1), 3, 1).count);
    CHECK(count_fiber_n2(weyl, 2, 0).count == count_points(fiber_spec(weyl, 2, 0), 2, 0).count);
}

TEST_CASE("partition identity: fibers over all lambda cover the whole space") {
    for (std::uint64_t q : {2u, 5u}) {
        for (const auto* w : {&quantum, &weyl}) {
            if (w == &weyl && q == 3) continue;
            mpz_class total = 0;
            for (std::uint64_t lambda = 0; lambda < q; ++lambda) total += count_fiber_n2(*w, q, lambda).count;
            mpz_class all;
            mpz_ui_pow_ui(all.get_mpz_t(), q, 12);
            CHECK(total == all);
        }
    }
}

TEST_CASE("scaling identity: lambda and c^3 lambda have equal counts") {
    const auto cells = cell_equations(weyl, 1);
    for (std::uint64_t q : {5u, 7u}) {
        for (std::uint64_t c = 2; c < q; ++c) {
            const std::uint64_t scaled = c * c % q * c % q;
            CHECK(count_points(cells[2], q, 1).count == count_points(cells[2], q, scaled).count);
            CHECK(count_fiber_n2(quantum, q, 1).count == count_fiber_n2(quantum, q, scaled).count);
        }
    }
}

TEST_CASE("anticommuting pairs") {
    for (std::uint64_t q : {2u, 5u})
        CHECK(count_anticommutator_rep2(q) == count_anticommutator_rep2_naive(q));
    const MotiveClass rep2 = parse_motive("L^5+3L^4-2L^3-2L^2+L");
    CHECK(count_anticommutator_rep2(5) == 4705);
    CHECK(count_anticommutator_rep2(5) == evaluate(rep2, 5, 1));
    CHECK(count_anticommutator_rep2(7) == evaluate(rep2, 7, 1));
    // characteristic 2 is recorded, not matched: XY + YX = XY - YX there
    CHECK(count_anticommutator_rep2(2) == 88);
    CHECK(evaluate(rep2, 2, 1) != 88);
}

TEST_CASE("bad primes") {
    CHECK_THROWS_AS(count_points(cell_equations(weyl, 1)[2], 3, 1), Error);
    CHECK_THROWS_AS(count_points(cell_equations(quantum, 1)[2], 9, 1), Error);
    try {
        (void)count_fiber(weyl, 1, 3, 1);
        FAIL("expected BadPrime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bad_prime);
    }
}

TEST_CASE("characteristic sensitivity flag") {
    const auto q = cell_equations(quantum, 1);
    CHECK(count_points(q[2], 2, 1).characteristic_sensitive);
    CHECK_FALSE(count_points(q[2], 5, 1).characteristic_sensitive);
}

TEST_CASE("interpolation of counts") {
    const auto s = spec_of({"x", "y", "z"}, "2xyz");
    std::vector<std::pair<std::uint64_t, mpz_class>> samples;
    for (std::uint64_t q : {5u, 7u, 11u}) samples.emplace_back(q, count_points(s, q, 1).count);
    CHECK(fit_count_polynomial(samples, 2) == parse_motive("L^2-2L+1"));

    const auto z = spec_of({"x", "y", "z"}, "xyz");
    samples.clear();
    for (std::uint64_t q : {2u, 5u, 7u}) samples.emplace_back(q, count_points(z, q, 0).count);
    CHECK(fit_count_polynomial(samples, 2) == parse_motive("3L^2-3L+1"));

    CHECK(fit_count_polynomial({{5, 9}, {7, 9}}, 0) == MotiveClass(9));
    CHECK_THROWS_AS(fit_count_polynomial({{2, 0}, {3, 1}, {5, 0}}, 2), Error);
}

TEST_CASE("cubic residue classes") {
    CHECK(lambda_classes(5, true).size() == 2);
    CHECK(lambda_classes(7, true).size() == 4);
    for (std::uint64_t q : {7u, 13u}) {
        for (auto c : lambda_classes(q, false)) {
            const std::uint64_t r = lambda_representative(c, q);
            CHECK(classify_lambda(r, q) == c);
            CHECK(classify_lambda(r * 8 % q, q) == c);
        }
        CHECK(classify_lambda(1, q) == LambdaClass::cubic_class_0);
    }
    CHECK(classify_lambda(0, 7) == LambdaClass::zero);
    CHECK(classify_lambda(3, 5) == LambdaClass::unit);
}

TEST_CASE("residue protocol") {
    // L^2 [mu_3] against the fiber {x^3 = -3 lambda} x A^2
    const MotiveClass p = parse_motive("L^2 mu3");
    const Counter fiber = [](std::uint64_t q, std::uint64_t lambda) { return count_fiber(weyl, 1, q, lambda); };
    const Report r = verify_motive_against_counts(p, fiber, 1, {5, 7, 13}, "M1");
    CHECK(r.passed());
    CHECK(r.count(CheckStatus::pass) == 3);
    const Report bad = verify_motive_against_counts(parse_motive("L^2"), fiber, 1, {7}, "M1");
    CHECK_FALSE(bad.passed());
    const Report skipped =
        verify_motive_against_counts(parse_motive("L + Mt + Mt2"), fiber, 1, {7}, "mixed");
    CHECK(skipped.count(CheckStatus::skip) == 1);
}

TEST_CASE("convolution convention for lambda = 0") {
    // over lambda = 0 the products [M_1(mu)][M_1(-mu)] summed over mu give
    // 3 (q - 1) q^4 at q = 1 mod 3, i.e. M~^2 specializes like M~
    const std::uint64_t q = 7;
    mpz_class sum = 0;
    for (std::uint64_t mu = 1; mu < q; ++mu) sum += count_fiber(weyl, 1, q, mu).count * count_fiber(weyl, 1, q, q - mu).count;
    const MotiveClass product = parse_motive("(L-1) L^4 (1-Mt)^2");
    CHECK(evaluate_convolution(product, q, 3) == sum);
    CHECK(evaluate(product, q, 3) != sum);
}
