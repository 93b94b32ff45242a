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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <mdt/polynomial.hpp>

namespace mdt {

/// Linear combination of cyclic words in the letters 0..m-1. Words are kept in
/// their lexicographically minimal rotation, merged, and nonzero.
class Superpotential {
public:
    using Word = std::vector<unsigned>;

    Superpotential() = default;
    explicit Superpotential(unsigned letters) : m_(letters) {}

    [[nodiscard]] unsigned letters() const noexcept { return m_; }
    [[nodiscard]] const std::map<Word, mpq_class>& terms() const noexcept { return terms_; }
    [[nodiscard]] mpq_class coefficient(const Word& word) const;
    /// Common word length, or nullopt for an empty or inhomogeneous potential.
    [[nodiscard]] std::optional<unsigned> degree() const;

    void add(Word word, const mpq_class& coeff);

    friend bool operator==(const Superpotential&, const Superpotential&) = default;

private:
    unsigned m_ = 0;
    std::map<Word, mpq_class> terms_;
};

Superpotential::Word canonical_rotation(const Superpotential::Word& word);

/// Parses signed terms "[coef] WORD" such as "XYZ - XZY - 1/3 XXX" or
/// "X1 X2 X3 + 2 X1^3". Letters X, Y, Z give m = 3; indexed letters X1..Xm
/// give m = the largest index. Throws ParseError with the byte offset.
Superpotential parse_potential(std::string_view text);

std::string to_string(const Superpotential& w);

/// Names of the entry variables of m generic n x n matrices, letter-major and
/// row-major. (3,2) uses n,p,q,r / s,t,u,v / w,x,y,z and (3,1) uses x,y,z.
std::vector<std::string> matrix_variables(unsigned m, unsigned n);

/// Tr(W(X_1, ..., X_m)) for generic n x n matrices.
Polynomial trace_expand(const Superpotential& w, unsigned n);

/// Tr(W) = C + Q_q q + Q_u u + Q_y y for three generic 2 x 2 matrices, with
/// Q_a = sum_b L[a][b] b over the upper variables b in (p, t, x).
struct BlockDecomposition {
    static constexpr std::array<const char*, 6> diagonal{"n", "r", "s", "v", "w", "z"};
    static constexpr std::array<const char*, 3> lower{"q", "u", "y"};
    static constexpr std::array<const char*, 3> upper{"p", "t", "x"};

    Polynomial cubic;
    std::array<Polynomial, 3> bilinear;
    std::array<std::array<Polynomial, 3>, 3> linear;

    [[nodiscard]] Polynomial reconstruct() const;
};

/// Throws DecompositionFailure when a monomial is not a closed path of length
/// three in the two-vertex quiver (C is diagonal-only, the rest is
/// lower * upper * diagonal).
BlockDecomposition block_decompose(const Polynomial& trace);

/// Affine stratum {equation = rhs} in the listed free variables.
struct StratumSpec {
    std::string name;
    std::vector<std::string> variables;
    std::map<std::string, int> fixed;
    std::map<std::string, unsigned> weights;
    Polynomial equation;
    unsigned rhs = 0;

    [[nodiscard]] unsigned dim() const noexcept { return static_cast<unsigned>(variables.size()); }
};

/// Grading under which every equation below is homogeneous of weight 3:
/// diagonal variables 1, upper variables 2, lower variables 0.
std::map<std::string, unsigned> cell_weights();

/// The three cells of the Brauer-Severi scheme of 3 generic 2 x 2 matrices
/// with cyclic vector e_1, restricted to Tr(W) = lambda (lambda in {0, 1}).
/// Free dimensions are 10, 9 and 8.
std::array<StratumSpec, 3> cell_equations(const Superpotential& w, unsigned lambda);

/// Fiber Tr(W)^{-1}(lambda) of n x n matrices as a stratum.
StratumSpec fiber_spec(const Superpotential& w, unsigned n, unsigned lambda);

/// Coefficients of W = alpha X^3 + beta Y^3 + gamma Z^3 + delta XYZ + epsilon XZY.
struct PotentialParams {
    mpq_class alpha, beta, gamma, delta, epsilon;
};

/// Throws InvalidArgument unless W has exactly that shape (m = 3).
PotentialParams potential_params(const Superpotential& w);

} // namespace mdt
