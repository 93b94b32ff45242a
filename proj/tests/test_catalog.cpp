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

#include <doctest.h>

#include <mdt/catalog.hpp>
#include <mdt/counting.hpp>
#include <mdt/error.hpp>
#include <mdt/expression.hpp>
#include <mdt/serialize.hpp>
#include <mdt/verify.hpp>

using namespace mdt;

TEST_CASE("catalog lookups") {
    CHECK(catalog_entry(Case::quantum, "BS2(1)").value == parse_motive_ratio("L^9+L^8+L^7-L^6-4L^5+2L^4"));
    CHECK(catalog_entry(Case::weyl, "BS2(0)").value == parse_motive_ratio("L^9+L^8+2L^7-L^6"));
    CHECK(catalog_entry(Case::quantum, "BS2(0)").derived);
    CHECK_FALSE(catalog_entry(Case::quantum, "BS2(1)").derived);
    CHECK_THROWS_AS(catalog_entry(Case::weyl, "M2(1)"), Error);
    CHECK_THROWS_AS(catalog_class(Case::quantum, "U1"), Error);
    CHECK_THROWS_AS(parse_case("nonsense"), Error);
}

TEST_CASE("catalog identities") {
    // the Grassmannian cone is L^5 + L^3 - L^2
    CHECK(catalog_entry(Case::quantum, "Gr(2,4)-cone").value == parse_motive_ratio("L^5+L^3-L^2"));
    // the BS strata add up to the totals
    for (Case c : {Case::quantum, Case::weyl}) {
        const auto total = catalog_class(c, "S1(1)") + catalog_class(c, "S2(1)") + catalog_class(c, "S3(1)");
        CHECK(total == catalog_class(c, "BS2(1)"));
    }
    const auto w0 = catalog_class(Case::weyl, "S1(0)") + catalog_class(Case::weyl, "S2(0)") +
                    catalog_class(Case::weyl, "S3(0)");
    CHECK(w0 == catalog_class(Case::weyl, "BS2(0)"));
}

TEST_CASE("motive JSON") {
    const MotiveClass a = parse_motive("L^2 - Mt L^2 + 3 L^(1/2)");
    const Json j = to_json(a);
    CHECK(j.dump() ==
          R"([{"c":"3","e2":1,"tag":"1"},{"c":"1","e2":4,"tag":"1"},{"c":"-1","e2":4,"tag":"Mt"}])");
    CHECK(motive_from_json(j) == a);
    CHECK(motive_from_json(Json("L^2 - Mt L^2 + 3 L^(1/2)")) == a);
    const MotiveRatio r = parse_motive_ratio("(2L-1)/(L-1)");
    CHECK(ratio_from_json(to_json(r)) == r);
    CHECK_THROWS_AS(motive_from_json(Json::parse(R"([{"e2":0,"tag":"X","c":"1"}])")), Error);
}

TEST_CASE("table JSON round trip") {
    const MotiveTable t = catalog_table(Case::weyl);
    const MotiveTable back = table_from_json(Json::parse(to_json(t).dump()));
    CHECK(back.entries() == t.entries());
    const MotiveTable text = table_from_json(Json::parse(
        R"({"m":3,"entries":[{"n":1,"lambda":1,"kind":"FIBER","motive":"(L-1)^2"},
                             {"n":1,"lambda":0,"kind":"FIBER","motive":"3L^2-3L+1"},
                             {"n":2,"lambda":1,"kind":"BS","motive":"L^9+L^8+L^7-L^6-4L^5+2L^4"},
                             {"n":2,"lambda":0,"kind":"BS","motive":"L^9+L^8+2L^7+3L^6-6L^5+2L^4"}]})"));
    CHECK(text.entries() == catalog_table(Case::quantum).entries());
    CHECK_THROWS_AS(table_from_json(Json::parse(R"({"entries":[{"n":1,"lambda":1,"kind":"X","motive":"1"}]})")),
                    Error);
}

TEST_CASE("stratum JSON") {
    const auto cells = cell_equations(parse_potential("XYZ + XZY"), 1);
    const Json j = to_json(cells[2]);
    CHECK(j["dim"] == 8);
    CHECK(j["fixed"]["q"] == 0);
    CHECK(j["fixed"]["y"] == 1);
    CHECK(j["weights"]["p"] == 2);
    CHECK(j["equation"].size() == 5);
}

TEST_CASE("verification of both cases") {
    CHECK(verify_cell_equations(Case::quantum).passed());
    CHECK(verify_cell_equations(Case::weyl).passed());
    CHECK(verify_induction(Case::quantum).passed());
    CHECK(verify_induction(Case::weyl).passed());
    const Report q = run_verification(Case::quantum, {{2, 5, 7}, 2});
    CHECK(q.passed());
    CHECK(q.count(CheckStatus::fail) == 0);
}

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(check_primes(Case::weyl, {5, 3}), Error);
    CHECK_THROWS_AS(check_primes(Case::quantum, {4}), Error);
    CHECK_NOTHROW(check_primes(Case::quantum, {2, 3}));
}

TEST_CASE("the Weyl potential at q = 2 does not follow the protocol") {
    // recorded behaviour: the second and third cells count as if [mu_3] were 0
    const auto cells = cell_equations(parse_potential("XYZ - XZY - 1/3 XXX"), 1);
    CHECK(count_points(cells[1], 2, 1).count == 192);
    CHECK(evaluate(catalog_class(Case::weyl, "S2(1)"), 2, 1) == 256);
    CHECK(evaluate(catalog_class(Case::weyl, "S2(1)"), 2, 0) == 192);
}
