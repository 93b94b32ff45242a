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

#include <mdt/error.hpp>

namespace mdt {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unreduced_equivariant_power: return "UnreducedEquivariantPower";
    case ErrorCode::unsupported_adams: return "UnsupportedAdams";
    case ErrorCode::non_integral_sigma: return "NonIntegralSigma";
    case ErrorCode::non_integral_exp: return "NonIntegralExp";
    case ErrorCode::fractional_exponent: return "FractionalExponent";
    case ErrorCode::twist_mismatch: return "TwistMismatch";
    case ErrorCode::bad_prime: return "BadPrime";
    case ErrorCode::not_linear: return "NotLinear";
    case ErrorCode::non_integral_fit: return "NonIntegralFit";
    case ErrorCode::non_exact_division: return "NonExactDivision";
    case ErrorCode::missing_entry: return "MissingEntry";
    case ErrorCode::decomposition_failure: return "DecompositionFailure";
    case ErrorCode::assumption_violated: return "AssumptionViolated";
    case ErrorCode::mismatch: return "Mismatch";
    case ErrorCode::unsupported_coefficient: return "UnsupportedCoefficient";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::parse_error, message + " at position " + std::to_string(position)),
      position_(position) {}

} // namespace mdt
