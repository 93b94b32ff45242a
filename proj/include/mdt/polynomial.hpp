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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mdt {

/// Multivariate polynomial with rational coefficients over a fixed, ordered
/// list of variable names. Binary operations require identical variable lists.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, mpq_class>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const mpq_class& c);
    static Polynomial variable(std::vector<std::string> variables, std::string_view name);

    [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return vars_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    [[nodiscard]] std::size_t require_index(std::string_view name) const;

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] mpq_class constant_term() const;
    [[nodiscard]] unsigned degree_in(std::string_view name) const;
    [[nodiscard]] unsigned total_degree() const;
    /// Variables that occur in some term, in declaration order.
    [[nodiscard]] std::vector<std::string> used_variables() const;

    /// Replaces `name` by `value` (same variable list).
    [[nodiscard]] Polynomial substitute(std::string_view name, const Polynomial& value) const;
    [[nodiscard]] Polynomial substitute(const std::map<std::string, mpq_class>& values) const;
    /// Coefficient of name^power, as a polynomial free of `name`.
    [[nodiscard]] Polynomial coefficient_of(std::string_view name, unsigned power) const;
    /// Common weighted degree of all terms, or nullopt if not weight-homogeneous.
    /// Variables missing from `weights` have weight 0.
    [[nodiscard]] std::optional<unsigned> weighted_degree(const std::map<std::string, unsigned>& weights) const;
    [[nodiscard]] mpq_class evaluate(const std::map<std::string, mpq_class>& values) const;

    void add_term(const Exponents& e, const mpq_class& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const mpq_class& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }
    friend Polynomial operator*(const mpq_class& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= mpq_class(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    [[nodiscard]] Polynomial pow(unsigned k) const;

private:
    void require_compatible(const Polynomial& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Terms ordered by descending total degree, then by variable order, with
/// explicit '*' between factors, e.g. "2*r*v*z + n*t - 1/3*n^3".
std::string to_string(const Polynomial& p);

} // namespace mdt
