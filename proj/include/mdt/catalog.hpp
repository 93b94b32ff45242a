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
#include <string>
#include <string_view>
#include <vector>

#include <mdt/motive.hpp>
#include <mdt/pipeline.hpp>

namespace mdt {

/// The two cubic potentials with tabulated data: W = XYZ + XZY (quantum
/// 3-space at q = -1) and W = XYZ - XZY - X^3/3 (homogenized Weyl algebra).
enum class Case { quantum, weyl };

const char* to_string(Case c) noexcept;
/// Accepts "quantum" and "weyl"; throws InvalidArgument otherwise.
Case parse_case(std::string_view name);
std::string potential_text(Case c);
/// Bracket f with U(t) = Exp(f), in the series syntax of parse_series.
std::string conjectured_bracket(Case c);

struct CatalogEntry {
    std::string label;
    MotiveRatio value;
    std::string latex;
    /// Computed from other entries through identities checked by verify.
    bool derived = false;
};

const std::vector<CatalogEntry>& catalog(Case c);
/// Throws MissingEntry.
const CatalogEntry& catalog_entry(Case c, std::string_view label);
/// The entry as a class; throws InvalidArgument for a genuine ratio.
MotiveClass catalog_class(Case c, std::string_view label);

/// Left-hand sides of the displayed cell equations S1, S2, S3 in the
/// single-letter syntax of parse_polynomial.
std::array<std::string, 3> displayed_cell_equations(Case c);

/// Inputs of the induction: [M_1(lambda)] and [BS_2(lambda)]. With
/// `with_fibers`, the tabulated [M_2(lambda)] are added where known.
MotiveTable catalog_table(Case c, bool with_fibers = false);

} // namespace mdt
