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
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <mdt/motive.hpp>
#include <mdt/report.hpp>
#include <mdt/superpotential.hpp>

namespace mdt {

bool is_prime(std::uint64_t q) noexcept;

struct CountOptions {
    /// Worker threads for the outer enumeration; results do not depend on it.
    unsigned jobs = 1;
    /// Variables to eliminate linearly. Empty means: pick a largest set of
    /// degree-one variables no two of which share a monomial.
    std::vector<std::string> linear_vars;
};

struct CountResult {
    mpz_class count;
    /// Some nonzero coefficient of the equation vanishes mod q.
    bool characteristic_sensitive = false;
    std::vector<std::string> linear_vars;
    double elapsed_ms = 0;
};

/// Number of points of {equation = lambda} in F_q^dim. The outer variables are
/// enumerated; for each assignment the equation is c_0 + sum_v c_v v in the
/// linear variables, contributing q^{l-1} if some c_v != 0 and q^l if all
/// vanish and c_0 = lambda.
/// Throws BadPrime if q is not prime or a coefficient denominator vanishes mod
/// q, NotLinear if a requested linear variable is not eliminable.
CountResult count_points(const StratumSpec& spec, std::uint64_t q, std::uint64_t lambda, const CountOptions& options = {});

/// Full enumeration of F_q^dim (for cross-checking; guarded to 2^26 points).
mpz_class count_naive(const StratumSpec& spec, std::uint64_t q, std::uint64_t lambda);

/// Points of Tr(W)^{-1}(lambda) in n x n matrices. For three letters and n = 2
/// this is count_fiber_n2, otherwise count_points on the trace.
CountResult count_fiber(const Superpotential& w, unsigned n, std::uint64_t q, std::uint64_t lambda, unsigned jobs = 1);

/// Fiber count for three 2 x 2 matrices: enumerate the six diagonal entries;
/// the remaining equation is c + l^T M u = lambda with M the 3 x 3 matrix of
/// linear forms L_ab, whose solution count depends only on rank M.
CountResult count_fiber_n2(const Superpotential& w, std::uint64_t q, std::uint64_t lambda, unsigned jobs = 1);

/// Pairs of 2 x 2 matrices over F_q with XY + YX = 0, as the sum over X of
/// q^{4 - rank(Y -> XY + YX)}.
mpz_class count_anticommutator_rep2(std::uint64_t q);
/// The same by enumerating all q^8 pairs.
mpz_class count_anticommutator_rep2_naive(std::uint64_t q);

/// Pairs (v, (X, Y, Z)) in F_q^2 x Tr(W)^{-1}(lambda) split by the dimension
/// k = 0, 1, 2 of the subspace generated by v. Full enumeration, q^12 <= 10^7.
std::array<mpz_class, 3> count_dim_strata(const Superpotential& w, std::uint64_t q, std::uint64_t lambda);

/// Exact interpolation of (q, count) samples by a polynomial in L. Throws
/// NonIntegralFit if a coefficient is not an integer or the degree exceeds
/// `degree_bound`.
MotiveClass fit_count_polynomial(const std::vector<std::pair<std::uint64_t, mpz_class>>& samples, unsigned degree_bound);

/// Classes of lambda in F_q modulo cubes: zero, the three cubic classes when
/// q = 1 mod 3, or the single unit class otherwise.
enum class LambdaClass { zero, cubic_class_0, cubic_class_1, cubic_class_2, unit };

const char* to_string(LambdaClass c) noexcept;
std::vector<LambdaClass> lambda_classes(std::uint64_t q, bool include_zero = true);
/// 0, 1, g, g^2 (g the least primitive root) or 1.
std::uint64_t lambda_representative(LambdaClass c, std::uint64_t q);
LambdaClass classify_lambda(std::uint64_t lambda, std::uint64_t q);

struct CountRecord {
    std::uint64_t q;
    LambdaClass lambda_class;
    mpz_class count;
};

/// Number of x in F_q with x^3 = 1.
unsigned cube_roots_of_unity(std::uint64_t q) noexcept;

using Counter = std::function<CountResult(std::uint64_t q, std::uint64_t lambda)>;

/// Checks P = A + B M~ + C M~^2 against counts of a weighted-homogeneous
/// family at each prime:
///   lambda = 0:            count = P with M~ -> 1 - #{x^3 = 1}
///   lambda = 1, q != 1 (3): count = A
///   lambda = 1, q = 1 (3):  the counts at 1, g, g^2 form the multiset
///                           {P(M~ -> -2), P(M~ -> 1), P(M~ -> 1)};
///                           skipped when B and C are both nonzero.
/// Mismatches on characteristic-sensitive equations are reported as warnings.
///
/// `pointwise` specializes M~^2 to (1 - c)^2 as evaluate() does. Under
/// `convolution` the lambda = 0 channel specializes M~^2 to 1 - c instead,
/// which is what summing products of class-dependent counts over all
/// lambda produces. The two agree whenever q != 1 (mod 3).
enum class ProductConvention { pointwise, convolution };

/// P(q) with M~ -> 1 - c and M~^2 -> 1 - c.
mpz_class evaluate_convolution(const MotiveClass& p, std::uint64_t q, int mu3_count);

Report verify_motive_against_counts(const MotiveClass& p, const Counter& counter, unsigned lambda_tag,
                                    const std::vector<std::uint64_t>& primes, const std::string& location,
                                    ProductConvention convention = ProductConvention::pointwise);

} // namespace mdt
