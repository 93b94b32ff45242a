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

#include <random>

#include <mdt/error.hpp>
#include <mdt/expression.hpp>
#include <mdt/motive.hpp>

using namespace mdt;

namespace {

MotiveClass cls(const char* text) { return parse_motive(text); }
MotiveRatio rat(const char* text) { return parse_motive_ratio(text); }

MotiveClass random_class(std::mt19937& rng, bool tagged, bool whole_powers = false) {
    std::uniform_int_distribution<int> coeff(-4, 4), e2(-4, 12), tag(0, tagged ? 2 : 0);
    MotiveClass out;
    for (int i = 0; i < 4; ++i) {
        const int e = e2(rng);
        out.add_term({whole_powers ? 2 * (e / 2) : e, static_cast<EquivTag>(tag(rng))}, coeff(rng));
    }
    return out;
}

} // namespace

TEST_CASE("addition collects like terms") {
    CHECK((cls("L^2") + cls("-L^2")).is_zero());
    CHECK(cls("3L^2-3L+1") + cls("(L-1)^2") == cls("4L^2-5L+2"));
    CHECK(cls("L^2 Mt") + cls("L^2 Mt") == MotiveClass::monomial(4, EquivTag::mtilde, 2));
}

TEST_CASE("multiplication") {
    CHECK(cls("L-1") * cls("L+1") == cls("L^2-1"));
    CHECK(MotiveClass::mtilde() * MotiveClass::mtilde() == MotiveClass::mtilde_squared());
    CHECK(MotiveClass::lefschetz_half(1) * MotiveClass::lefschetz_half(1) == MotiveClass::lefschetz());
    CHECK_THROWS_AS(MotiveClass::mtilde() * MotiveClass::mtilde_squared(), Error);
}

TEST_CASE("mu3 is one minus M~") {
    CHECK(MotiveClass::mu3() == MotiveClass(1) - MotiveClass::mtilde());
}

TEST_CASE("ring axioms on random tag-free and tagged classes") {
    std::mt19937 rng(20260);
    for (int i = 0; i < 200; ++i) {
        const MotiveClass a = random_class(rng, false), b = random_class(rng, false), c = random_class(rng, false);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MotiveClass());
        CHECK(a * MotiveClass(1) == a);
        const MotiveClass t = random_class(rng, true);
        CHECK(t + a == a + t);
        CHECK(t - t == MotiveClass());
    }
}

TEST_CASE("general linear group classes") {
    CHECK(gl_motive(1) == cls("L-1"));
    CHECK(gl_motive(2) == cls("L^4-L^3-L^2+L"));
    CHECK(gl_motive(3) == cls("(L^3-1)(L^3-L)(L^3-L^2)"));
}

TEST_CASE("exact division") {
    CHECK(divide_exact(cls("L^4-L^3-L^2+L"), cls("L-1")) == cls("L^3-L"));
    CHECK_FALSE(try_divide_exact(cls("L^2+1"), cls("L-1")).has_value());
    CHECK_THROWS_AS(divide_exact(cls("L^2+1"), cls("L-1")), Error);
}

TEST_CASE("ratios compare by cross multiplication") {
    CHECK(rat("(L^2-1)/(L-1)") == rat("L+1"));
    CHECK(rat("1/(L-1) + 1/(L+1)") == rat("2L/(L^2-1)"));
    CHECK_FALSE(rat("1/(L-1)") == rat("1/(L+1)"));
    CHECK(as_class(rat("(L^3-L)/(L+1)")) == cls("L^2-L"));
}

TEST_CASE("Adams operations") {
    CHECK(adams(cls("L^2"), 3) == cls("L^6"));
    CHECK(adams(MotiveClass::mtilde(), 2) == cls("2L-Mt2"));
    CHECK(adams(MotiveClass::mtilde(), 1) == MotiveClass::mtilde());
    CHECK_THROWS_AS(adams(MotiveClass::mtilde(), 3), Error);
    CHECK(adams(rat("(2L-1)/(L-1)"), 2) == rat("(2L^2-1)/(L^2-1)"));
}

TEST_CASE("second symmetric power") {
    CHECK(sigma2(MotiveRatio(MotiveClass::mtilde())) == rat("L"));
    CHECK(sigma2(rat("L Mt/(L-1)")) == rat("(L^2 Mt2 + L^3(L-1))/((L-1)(L^2-1))"));
    CHECK(sigma2(rat("(2L-1)/(L-1)")) == rat("(3L^3-L^2-2L+1)/((L-1)^2(L+1))"));
    // points of Sym^2 X over F_q: (|X(F_q)|^2 + |X(F_{q^2})|) / 2
    const MotiveClass x = cls("L^2+L+1");
    const auto s = as_class(sigma2(MotiveRatio(x)));
    REQUIRE(s.has_value());
    for (std::uint64_t q : {2u, 3u, 5u}) {
        const mpz_class n = evaluate(x, q, 1);
        CHECK(evaluate(*s, q, 1) == (n * n + evaluate(x, q * q, 1)) / 2);
    }
}

TEST_CASE("finite field specialization") {
    CHECK(evaluate(cls("(L-1)^2"), 5, 1) == 16);
    CHECK(evaluate(cls("L^2(1-Mt)"), 7, 3) == 147);
    CHECK(evaluate(cls("L^7+Mt L^6+Mt L^5"), 5, 1) == 78125);
    CHECK(evaluate(cls("L^2 Mt2"), 7, 3) == 196);
}

TEST_CASE("evaluation is a ring homomorphism at several primes") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        MotiveClass a = random_class(rng, false, true), b = random_class(rng, false, true);
        // shift into non-negative exponents so the values are integers
        a = a.shifted(4);
        b = b.shifted(4);
        for (std::uint64_t q : {2u, 5u, 7u, 11u}) {
            CHECK(evaluate(a + b, q, 1) == evaluate(a, q, 1) + evaluate(b, q, 1));
            CHECK(evaluate(a * b, q, 1) == evaluate(a, q, 1) * evaluate(b, q, 1));
        }
    }
}

TEST_CASE("printing") {
    CHECK(to_string(cls("3L^2-3L+1")) == "3*L^2 - 3*L + 1");
    CHECK(to_string(rat("(2L-1)/(L-1)")) == "(2*L - 1)/(L - 1)");
    CHECK(to_string(MotiveClass()) == "0");
}
