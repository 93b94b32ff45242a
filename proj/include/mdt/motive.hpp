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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include <mdt/error.hpp>

namespace mdt {

/// Equivariant generator attached to a monomial: 1, M~ = 1 - [mu_3], or the
/// formal symbol M~^2. M~^2 is never reduced further.
enum class EquivTag : std::uint8_t { unit = 0, mtilde = 1, mtilde2 = 2 };

/// A monomial L^{e2/2} * tag. Exponents are stored doubled so that half powers
/// of the Lefschetz motive stay integral.
struct MonomialKey {
    std::int64_t e2 = 0;
    EquivTag tag = EquivTag::unit;

    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// Exact element of Z[L^{1/2}, L^{-1/2}] extended by the formal generators
/// M~ and M~^2. Coefficients are arbitrary precision; zero terms are never
/// stored, so the representation is canonical and operator== is structural.
class MotiveClass {
public:
    using TermMap = std::map<MonomialKey, mpz_class>;

    MotiveClass() = default;
    MotiveClass(long constant); // NOLINT(google-explicit-constructor): integers embed
    explicit MotiveClass(const mpz_class& constant);

    static MotiveClass lefschetz(std::int64_t power = 1);
    static MotiveClass lefschetz_half(std::int64_t e2);
    static MotiveClass monomial(std::int64_t e2, EquivTag tag, const mpz_class& coeff = 1);
    static MotiveClass mtilde();
    static MotiveClass mtilde_squared();
    /// [mu_3] = 1 - M~.
    static MotiveClass mu3();

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_tag_free() const noexcept;
    [[nodiscard]] bool has_tag(EquivTag tag) const noexcept;
    [[nodiscard]] bool has_half_powers() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Smallest / largest doubled exponent. Precondition: nonzero.
    [[nodiscard]] std::int64_t min_e2() const;
    [[nodiscard]] std::int64_t max_e2() const;

    /// The coefficient of `tag` as a tag-free class (so P = A + B*M~ + C*M~^2).
    [[nodiscard]] MotiveClass component(EquivTag tag) const;
    [[nodiscard]] mpz_class coefficient(std::int64_t e2, EquivTag tag = EquivTag::unit) const;
    /// Multiplication by L^{e2/2}.
    [[nodiscard]] MotiveClass shifted(std::int64_t e2) const;
    [[nodiscard]] MotiveClass retagged(EquivTag tag) const;
    /// gcd of all coefficients (0 for the zero class).
    [[nodiscard]] mpz_class content() const;
    [[nodiscard]] std::optional<MotiveClass> divided_by(const mpz_class& k) const;
    [[nodiscard]] MotiveClass pow(unsigned exponent) const;

    MotiveClass& operator+=(const MotiveClass& other);
    MotiveClass& operator-=(const MotiveClass& other);
    MotiveClass& operator*=(const MotiveClass& other);

    friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
    friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }
    friend MotiveClass operator*(const MotiveClass& a, const MotiveClass& b);
    friend MotiveClass operator-(const MotiveClass& a);
    friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

    void add_term(const MonomialKey& key, const mpz_class& coeff);

private:
    TermMap terms_;
};

/// [GL_n] = prod_{k=0}^{n-1} (L^n - L^k).
MotiveClass gl_motive(unsigned n);

/// Exact quotient a / d for a tag-free divisor d, or nullopt when d does not
/// divide a in Z[L^{±1/2}][M~, M~^2].
std::optional<MotiveClass> try_divide_exact(const MotiveClass& a, const MotiveClass& d);
/// As try_divide_exact, throwing NonExactDivision on failure.
MotiveClass divide_exact(const MotiveClass& a, const MotiveClass& d, const std::string& context = {});

/// Adams operation psi_k: L^{e/2} -> L^{ke/2}, psi_2(M~) = 2L - M~^2.
/// Throws UnsupportedAdams for psi_k (k >= 3) on tagged input and for psi_2(M~^2).
MotiveClass adams(const MotiveClass& a, unsigned k);

/// Point-count specialisation L -> q, M~ -> 1 - mu3_count. mu3_count is the
/// number of F_q-points of the relevant mu_3-torsor: 3, 1, or 0.
mpz_class evaluate(const MotiveClass& a, std::uint64_t q, int mu3_count);

std::string to_string(const MotiveClass& a);
std::ostream& operator<<(std::ostream& os, const MotiveClass& a);

/// Quotient of two classes. Stored lightly reduced (monomial shift, integer
/// content, cyclotomic factors in L^{1/2}); equality is cross-multiplication.
class MotiveRatio {
public:
    MotiveRatio() : den_(1) {}
    MotiveRatio(MotiveClass numerator); // NOLINT(google-explicit-constructor)
    MotiveRatio(long constant) : MotiveRatio(MotiveClass(constant)) {} // NOLINT
    MotiveRatio(MotiveClass numerator, MotiveClass denominator);

    [[nodiscard]] const MotiveClass& numerator() const noexcept { return num_; }
    [[nodiscard]] const MotiveClass& denominator() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_tag_free() const noexcept { return num_.is_tag_free() && den_.is_tag_free(); }

    MotiveRatio& operator+=(const MotiveRatio& other);
    MotiveRatio& operator-=(const MotiveRatio& other);
    MotiveRatio& operator*=(const MotiveRatio& other);
    MotiveRatio& operator/=(const MotiveRatio& other);

    friend MotiveRatio operator+(MotiveRatio a, const MotiveRatio& b) { return a += b; }
    friend MotiveRatio operator-(MotiveRatio a, const MotiveRatio& b) { return a -= b; }
    friend MotiveRatio operator*(MotiveRatio a, const MotiveRatio& b) { return a *= b; }
    friend MotiveRatio operator/(MotiveRatio a, const MotiveRatio& b) { return a /= b; }
    friend MotiveRatio operator-(const MotiveRatio& a);
    friend bool operator==(const MotiveRatio& a, const MotiveRatio& b);

private:
    struct Unreduced {};
    MotiveRatio(MotiveClass numerator, MotiveClass denominator, Unreduced);

    MotiveClass num_;
    MotiveClass den_;
};

MotiveRatio adams(const MotiveRatio& a, unsigned k);

/// sigma_2(a) = (a^2 + psi_2(a)) / 2, with the halving checked for exactness.
MotiveRatio sigma2(const MotiveRatio& a);

/// a / k with the integer division checked on the numerator; `failure` is the
/// error code raised when it is not exact.
MotiveRatio divide_by_integer(const MotiveRatio& a, const mpz_class& k, ErrorCode failure);

/// The ratio as a class when its denominator divides its numerator.
std::optional<MotiveClass> as_class(const MotiveRatio& a);

/// Expansion of a tag-free ratio as a Laurent series in L^{-1/2}, keeping only
/// terms with doubled exponent >= min_e2.
MotiveClass expand_in_inverse_lefschetz(const MotiveRatio& a, std::int64_t min_e2);

std::string to_string(const MotiveRatio& a);
std::ostream& operator<<(std::ostream& os, const MotiveRatio& a);

} // namespace mdt
