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

#include <mdt/report.hpp>

#include <algorithm>

namespace mdt {

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::warn: return "warn";
    case CheckStatus::skip: return "skip";
    }
    return "?";
}

void Report::add(std::string check, bool ok, std::string lhs, std::string rhs, std::string location) {
    records_.push_back({std::move(check), ok ? CheckStatus::pass : CheckStatus::fail, std::move(lhs), std::move(rhs),
                        std::move(location)});
}

void Report::append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::passed() const noexcept { return first_failure() == nullptr; }

std::size_t Report::count(CheckStatus status) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [status](const CheckRecord& r) { return r.status == status; }));
}

const CheckRecord* Report::first_failure() const noexcept {
    for (const auto& r : records_)
        if (r.status == CheckStatus::fail) return &r;
    return nullptr;
}

std::string render_plain(const Report& report) {
    std::size_t check_width = 5, location_width = 8;
    for (const auto& r : report.records()) {
        check_width = std::max(check_width, r.check.size());
        location_width = std::max(location_width, r.location.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    std::string out = pad("status", 6) + "  " + pad("check", check_width) + "  " + pad("location", location_width) +
                      "  computed | expected\n";
    for (const auto& r : report.records())
        out += pad(to_string(r.status), 6) + "  " + pad(r.check, check_width) + "  " + pad(r.location, location_width) +
               "  " + r.lhs + " | " + r.rhs + "\n";
    out += std::to_string(report.count(CheckStatus::pass)) + " passed, " +
           std::to_string(report.count(CheckStatus::fail)) + " failed, " +
           std::to_string(report.count(CheckStatus::warn)) + " warnings, " +
           std::to_string(report.count(CheckStatus::skip)) + " skipped\n";
    return out;
}

} // namespace mdt
