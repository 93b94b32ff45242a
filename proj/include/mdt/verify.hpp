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
#include <vector>

#include <mdt/catalog.hpp>
#include <mdt/report.hpp>

namespace mdt {

/// quantum: 2, 5, 7. weyl: 5, 7, 13.
std::vector<std::uint64_t> default_primes(Case c);
/// Throws BadPrime for a non-prime, and for 3 in the Weyl case.
void check_primes(Case c, const std::vector<std::uint64_t>& primes);

/// Cell equations from the block decomposition against the displayed ones.
Report verify_cell_equations(Case c);
/// Cell counts and their sums against the catalog, by the mu_3 protocol.
Report verify_strata_counts(Case c, const std::vector<std::uint64_t>& primes, unsigned jobs);
/// Symbolic side: induction, delta, S3 formula, u-series, Exp, functional equation.
Report verify_induction(Case c);
/// Fibers for n = 1, 2 counted directly.
Report verify_fiber_counts(Case c, const std::vector<std::uint64_t>& primes, unsigned jobs);
/// Anticommutator counts interpolated at the given primes, then the
/// dimensional-reduction identities of the quantum case.
Report verify_dimensional_reduction(const std::vector<std::uint64_t>& primes);
/// Point-count shadow of the stratification by dim span(v) for the
/// quantum case (q^12 <= 10^7, so q in {2, 3}).
Report verify_shadow(const std::vector<std::uint64_t>& primes);

struct VerifyOptions {
    std::vector<std::uint64_t> primes;
    unsigned jobs = 1;
};

/// All of the above for one case. Throws BadPrime before any work is done.
Report run_verification(Case c, const VerifyOptions& options);

} // namespace mdt
