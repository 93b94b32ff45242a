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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <mdt/motive.hpp>

namespace mdt {

/// Power series in t over MotiveRatio, truncated after t^order. A nonzero
/// twist w selects the product t^a * t^b = L^{w a b} t^{a+b}.
class Series {
public:
    explicit Series(unsigned order, unsigned twist = 0);

    static Series constant(const MotiveRatio& c, unsigned order, unsigned twist = 0);
    static Series monomial(const MotiveRatio& c, unsigned power, unsigned order, unsigned twist = 0);

    [[nodiscard]] unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] unsigned twist() const noexcept { return twist_; }
    [[nodiscard]] const std::vector<MotiveRatio>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const MotiveRatio& operator[](unsigned i) const { return coeffs_.at(i); }
    void set(unsigned i, MotiveRatio c) { coeffs_.at(i) = std::move(c); }

    [[nodiscard]] bool is_tag_free() const noexcept;
    [[nodiscard]] Series truncated(unsigned order) const;
    /// t -> t^k.
    [[nodiscard]] Series substitute_power(unsigned k) const;
    /// t -> factor * t, i.e. the n-th coefficient is multiplied by factor^n.
    [[nodiscard]] Series scale_variable(const MotiveClass& factor) const;
    /// Multiplicative inverse for the ordinary product (twist 0).
    [[nodiscard]] Series inverse() const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const MotiveRatio& scalar);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const MotiveRatio& s) { return a *= s; }
    friend Series operator*(const MotiveRatio& s, Series a) { return a *= s; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<MotiveRatio> coeffs_;
    unsigned twist_;
};

/// a * (t^period + t^{2 period} + ...) truncated at t^order.
Series geometric_fraction(const MotiveRatio& a, unsigned period, unsigned order);

/// Plethystic exponential exp(sum_k psi_k(f)(t^k) / k). The division by n in
/// the coefficient recursion is checked for exactness.
Series pleth_exp(const Series& f, unsigned order);

/// Inverse of pleth_exp: sum_k mu(k)/k psi_k(log g)(t^k).
Series pleth_log(const Series& g, unsigned order);

/// Exp evaluated as the truncated product prod (1 - L^j t^n)^{-c}, with all
/// coefficients expanded in L^{-1} and terms below L^lmin discarded.
Series exp_product_form(const Series& f, unsigned order, std::int64_t lmin);

/// Coefficientwise expansion in L^{-1}, dropping exponents below L^lmin.
Series lefschetz_truncation(const Series& s, std::int64_t lmin);

/// M -> -M / (L^{1/2} - L^{-1/2}): converts a numerator in the conjectured
/// normalisation into the positive bracket coefficient used here.
MotiveRatio from_conjecture_normalization(const MotiveRatio& m);
MotiveRatio to_conjecture_normalization(const MotiveRatio& bracket);

std::string to_string(const Series& s);
std::ostream& operator<<(std::ostream& os, const Series& s);

} // namespace mdt
