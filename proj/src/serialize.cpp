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

#include <mdt/serialize.hpp>

#include <mdt/error.hpp>
#include <mdt/expression.hpp>

namespace mdt {

namespace {

const char* tag_name(EquivTag tag) {
    switch (tag) {
    case EquivTag::unit: return "1";
    case EquivTag::mtilde: return "Mt";
    case EquivTag::mtilde2: return "Mt2";
    }
    return "1";
}

EquivTag tag_from_name(const std::string& name) {
    if (name == "1") return EquivTag::unit;
    if (name == "Mt") return EquivTag::mtilde;
    if (name == "Mt2") return EquivTag::mtilde2;
    throw Error(ErrorCode::parse_error, "unknown motive tag '" + name + "'");
}

std::string monomial_text(const std::vector<std::string>& vars, const Polynomial::Exponents& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[i];
        if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace

Json to_json(const MotiveClass& a) {
    Json out = Json::array();
    for (const auto& [key, c] : a.terms())
        out.push_back({{"e2", key.e2}, {"tag", tag_name(key.tag)}, {"c", c.get_str()}});
    return out;
}

MotiveClass motive_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_motive(j.get<std::string>());
        if (j.is_number_integer()) return MotiveClass(mpz_class(j.get<long>()));
        if (!j.is_array()) throw Error(ErrorCode::parse_error, "motive must be a list of records or a string");
        MotiveClass out;
        for (const auto& rec : j) {
            const mpz_class c(rec.at("c").is_string() ? rec.at("c").get<std::string>()
                                                      : std::to_string(rec.at("c").get<long>()));
            out.add_term({rec.at("e2").get<std::int64_t>(), tag_from_name(rec.at("tag").get<std::string>())}, c);
        }
        return out;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed motive JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::parse_error, "malformed integer in motive JSON");
    }
}

Json to_json(const MotiveRatio& a) { return {{"num", to_json(a.numerator())}, {"den", to_json(a.denominator())}}; }

MotiveRatio ratio_from_json(const Json& j) {
    if (j.is_string()) return parse_motive_ratio(j.get<std::string>());
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return MotiveRatio(motive_from_json(j.at("num")), motive_from_json(j.at("den")));
    return MotiveRatio(motive_from_json(j));
}

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"twist", s.twist()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [exps, c] : p.terms()) out.push_back({monomial_text(p.variables(), exps), c.get_str()});
    return out;
}

Json to_json(const StratumSpec& spec) {
    return {{"name", spec.name},   {"dim", spec.dim()},          {"variables", spec.variables},
            {"fixed", spec.fixed}, {"weights", spec.weights},    {"equation", to_json(spec.equation)},
            {"rhs", spec.rhs},     {"text", to_string(spec.equation)}};
}

Json to_json(const CheckRecord& r) {
    return {{"check", r.check}, {"status", to_string(r.status)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"location", r.location}};
}

Json to_json(const Report& report) {
    Json records = Json::array();
    for (const auto& r : report.records()) records.push_back(to_json(r));
    return {{"passed", report.passed()}, {"records", std::move(records)}};
}

Json to_json(const MotiveTable& table) {
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        const auto& [n, lambda, kind] = key;
        entries.push_back({{"n", n}, {"lambda", lambda}, {"kind", to_string(kind)}, {"motive", to_json(value)}});
    }
    return {{"m", table.m()}, {"entries", std::move(entries)}};
}

MotiveTable table_from_json(const Json& j) {
    try {
        MotiveTable table(j.value("m", 3u));
        for (const auto& e : j.at("entries")) {
            const std::string kind = e.at("kind").get<std::string>();
            if (kind != "FIBER" && kind != "BS")
                throw Error(ErrorCode::parse_error, "entry kind must be FIBER or BS, got '" + kind + "'");
            const unsigned lambda = e.at("lambda").get<unsigned>();
            if (lambda > 1) throw Error(ErrorCode::invalid_argument, "lambda tag must be 0 or 1");
            table.set(e.at("n").get<unsigned>(), lambda, kind == "FIBER" ? EntryKind::fiber : EntryKind::bs,
                      motive_from_json(e.at("motive")));
        }
        return table;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed motive table JSON: ") + e.what());
    }
}

Json to_json(Case c, const std::vector<CatalogEntry>& entries) {
    Json list = Json::array();
    for (const auto& e : entries) {
        Json item{{"label", e.label}, {"value", to_string(e.value)}, {"latex", e.latex}, {"derived", e.derived}};
        if (const auto cls = as_class(e.value)) item["motive"] = to_json(*cls);
        else item["ratio"] = to_json(e.value);
        list.push_back(std::move(item));
    }
    const auto cells = displayed_cell_equations(c);
    return {{"case", to_string(c)},
            {"potential", potential_text(c)},
            {"bracket", conjectured_bracket(c)},
            {"cell_equations", Json::array({cells[0], cells[1], cells[2]})},
            {"entries", std::move(list)}};
}

} // namespace mdt
