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

#include <json.hpp>

#include <mdt/catalog.hpp>
#include <mdt/motive.hpp>
#include <mdt/pipeline.hpp>
#include <mdt/polynomial.hpp>
#include <mdt/report.hpp>
#include <mdt/series.hpp>
#include <mdt/superpotential.hpp>

namespace mdt {

using Json = nlohmann::json;

/// [{"e2": k, "tag": "1"|"Mt"|"Mt2", "c": "<integer>"}, ...] sorted by (e2, tag).
Json to_json(const MotiveClass& a);
/// Also accepts an expression string such as "L^2 - Mt*L^2".
MotiveClass motive_from_json(const Json& j);

Json to_json(const MotiveRatio& a);
MotiveRatio ratio_from_json(const Json& j);

Json to_json(const Series& s);
/// [[monomial, coefficient], ...] with monomials like "r*v*z" and "1".
Json to_json(const Polynomial& p);
Json to_json(const StratumSpec& spec);
Json to_json(const CheckRecord& r);
Json to_json(const Report& report);

Json to_json(const MotiveTable& table);
MotiveTable table_from_json(const Json& j);

Json to_json(Case c, const std::vector<CatalogEntry>& entries);

} // namespace mdt
