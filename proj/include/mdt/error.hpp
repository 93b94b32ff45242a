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
#include <stdexcept>
#include <string>

namespace mdt {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    unreduced_equivariant_power,
    unsupported_adams,
    non_integral_sigma,
    non_integral_exp,
    fractional_exponent,
    twist_mismatch,
    bad_prime,
    not_linear,
    non_integral_fit,
    non_exact_division,
    missing_entry,
    decomposition_failure,
    assumption_violated,
    mismatch,
    unsupported_coefficient,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every domain failure in the library. The code is what
/// crosses the C boundary; the message carries the diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message);

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace mdt
