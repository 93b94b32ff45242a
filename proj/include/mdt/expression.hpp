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

#include <string>
#include <string_view>
#include <vector>

#include <mdt/motive.hpp>
#include <mdt/polynomial.hpp>
#include <mdt/series.hpp>

namespace mdt {

// Infix expressions with + - * / ^, parentheses and implicit multiplication
// ("2L", "L(L-1)"). Exponents are integers, optionally written "(-3)", and
// half-integers "(3/2)" are accepted on pure powers of L.
//
// Symbols in motive expressions: L, Mt (= M~), Mt2 (= M~^2), mu3 (= 1 - M~).
// Series expressions add the variable t. Errors throw ParseError carrying the
// byte offset of the offending token.

MotiveRatio parse_motive_ratio(std::string_view text);

/// Parses a ratio and requires it to be a class (denominator divides).
MotiveClass parse_motive(std::string_view text);

/// Series in t truncated after t^order, e.g. "(2L-1)/(L-1)*t/(1-t)".
Series parse_series(std::string_view text, unsigned order);

/// Polynomial with rational coefficients. Every letter is a separate variable
/// ("2rvz" is 2*r*v*z) and must belong to `variables`.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

} // namespace mdt
