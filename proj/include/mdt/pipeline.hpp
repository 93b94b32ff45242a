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

#include <map>
#include <tuple>

#include <mdt/motive.hpp>
#include <mdt/report.hpp>
#include <mdt/series.hpp>
#include <mdt/superpotential.hpp>

namespace mdt {

enum class EntryKind { fiber, bs };

const char* to_string(EntryKind kind) noexcept;

/// Motives [M_n(lambda)] and [BS_n(lambda)] for lambda in {0, 1}; every
/// nonzero lambda behaves like 1 for a homogeneous potential.
class MotiveTable {
public:
    using Key = std::tuple<unsigned, unsigned, EntryKind>;

    explicit MotiveTable(unsigned m = 3) : m_(m) {}

    [[nodiscard]] unsigned m() const noexcept { return m_; }
    [[nodiscard]] const std::map<Key, MotiveClass>& entries() const noexcept { return entries_; }

    void set(unsigned n, unsigned lambda, EntryKind kind, MotiveClass value);
    /// For n = 1 the fiber and the Brauer-Severi scheme coincide, so either
    /// entry answers for the other.
    [[nodiscard]] bool has(unsigned n, unsigned lambda, EntryKind kind) const;
    /// Throws MissingEntry.
    [[nodiscard]] const MotiveClass& get(unsigned n, unsigned lambda, EntryKind kind) const;

private:
    unsigned m_;
    std::map<Key, MotiveClass> entries_;
};

/// [X_{k,n,lambda}]: pairs (v, rep) in the fiber where v generates a
/// k-dimensional subrepresentation. k = 0 and k = n are the fiber and
/// [GL_n][BS_n]; otherwise
///   [GL_n] L^{(m-1)k(n-k)} sum_mu [BS_k(mu)] [M_{n-k}(lambda - mu)] / [GL_{n-k}]
/// with the sum over mu in A^1 collapsed by homogeneity.
MotiveClass stratum_motive(unsigned k, unsigned n, unsigned lambda, const MotiveTable& table);

/// Solves L^n [M_n] = [M_n] + sum_{0<k<n} [X_k] + [GL_n][BS_n] for [M_n].
MotiveClass induct_fiber(unsigned n, unsigned lambda, const MotiveTable& table);

/// [M_n(lambda)] from the table, or by induct_fiber when absent.
MotiveClass fiber_motive(unsigned n, unsigned lambda, const MotiveTable& table);

/// (M_n(0) - M_n(1)) / [GL_n] from
///   (L^n - 1) dM_n/[GL_n] = dBS_n + sum_{0<k<n} L^{(m-1)k(n-k)} / [GL_{n-k}] dBS_k dM_{n-k},
/// using tabulated fibers for the lower dM when present.
MotiveRatio induct_delta(unsigned n, const MotiveTable& table);

/// 1 + R_1(L t) = 1 + B_1 + R_1 + B_0 * R_1 + B_1 * R_0 + (L - 2) B_1 * R_1 in
/// the product t^a * t^b = L^{(m-1)ab} t^{a+b}, with B_lambda = sum [BS_n] t^n
/// and R_lambda = sum [M_n]/[GL_n] t^n. One record per order.
Report functional_equation_check(const MotiveTable& table, unsigned order);

/// U(t) = 1 + sum_n L^{-(m-1)n^2/2} dM_n/[GL_n] t^n. Throws FractionalExponent
/// when (m-1)n^2 is odd.
Series u_series(const MotiveTable& table, unsigned order);

/// L^{2m} = [M_2(0)] + (L - 1)[M_2(1)] and [M_2(0)] - [M_2(1)] = L^4 [rep_2].
Report dimensional_reduction_check(const MotiveTable& table, const MotiveClass& rep2);

/// [S_3] for W = alpha X^3 + beta Y^3 + gamma Z^3 + XYZ + epsilon XZY from the
/// residual bracket motive:
///   gamma != 0: L^7 - L^4 + L^3 [bracket]   (bracket in A^2)
///   gamma  = 0: L^7 - L^5 + L^3 [bracket]   (bracket in A^3)
/// Throws AssumptionViolated unless delta = 1 and epsilon != 0.
MotiveClass prop_s3_motive(const PotentialParams& params, const MotiveClass& bracket);

/// The bracket variety {W(n,s,0) + W(-n/epsilon, -epsilon s, z) = 1}, with
/// z = 0 when gamma != 0.
StratumSpec s3_bracket_spec(const PotentialParams& params);

} // namespace mdt
