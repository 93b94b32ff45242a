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
#include <vector>

namespace mdt {

enum class CheckStatus { pass, fail, warn, skip };

const char* to_string(CheckStatus status) noexcept;

/// One comparison: `lhs` is what was computed, `rhs` what it was checked against.
struct CheckRecord {
    std::string check;
    CheckStatus status = CheckStatus::pass;
    std::string lhs;
    std::string rhs;
    std::string location;
};

class Report {
public:
    void add(CheckRecord record) { records_.push_back(std::move(record)); }
    void add(std::string check, bool ok, std::string lhs, std::string rhs, std::string location);
    void append(const Report& other);

    [[nodiscard]] const std::vector<CheckRecord>& records() const noexcept { return records_; }
    /// No record failed (warnings and skips are allowed).
    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::size_t count(CheckStatus status) const noexcept;
    [[nodiscard]] const CheckRecord* first_failure() const noexcept;

private:
    std::vector<CheckRecord> records_;
};

/// Fixed-width text table, one line per record.
std::string render_plain(const Report& report);

} // namespace mdt
