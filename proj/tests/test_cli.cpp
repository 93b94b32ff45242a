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

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(MDT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) out += buffer.data();
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST_CASE("catalog") {
    const Run q = run("catalog --case quantum");
    CHECK(q.status == 0);
    CHECK(q.out.find("L^9 + L^8 + L^7 - L^6 - 4*L^5 + 2*L^4") != std::string::npos);
    const Run w = run("catalog --case weyl --format json");
    CHECK(w.status == 0);
    CHECK(w.out.find("L^9 + L^8 + 2*L^7 - L^6") != std::string::npos);
    CHECK(run("catalog --case nonsense").status == 2);
}

TEST_CASE("verify exit codes") {
    CHECK(run("verify --case weyl --primes 3").status == 2);
    CHECK(run("verify --case quantum --primes 4").status == 2);
    CHECK(run("verify --case quantum --primes 2,5,7").status == 0);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("count --q 5 --lambda 7").status == 2);
    CHECK(run("count --bogus").status == 2);
    CHECK(run("exp --bracket \"L*\"").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("count writes one CSV row per lambda class") {
    const Run r = run("count --potential \"XYZ+XZY\" --n 2 --lambda 1 --q 5");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("q,lambda_class,count,elapsed_ms\n5,unit,48240000,", 0) == 0);
    const Run all = run("count --case weyl --n 1 --lambda all --q 7 --format json");
    CHECK(all.status == 0);
    CHECK(all.out.find("\"count\": \"147\"") != std::string::npos);
}

TEST_CASE("series expansion") {
    const Run r = run("exp --bracket \"(2L-1)/(L-1)*t/(1-t)+(L-1)*t^2/(1-t^2)\" --order 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("L^4 + 3*L^3 - 2*L^2 - 2*L + 1") != std::string::npos);
}

TEST_CASE("induction from a table file") {
    const std::string path = "cli_test_table.json";
    {
        std::ofstream f(path);
        f << R"({"m":3,"entries":[{"n":1,"lambda":1,"kind":"FIBER","motive":"(L-1)^2"},
                {"n":1,"lambda":0,"kind":"FIBER","motive":"3L^2-3L+1"},
                {"n":2,"lambda":1,"kind":"BS","motive":"L^9+L^8+L^7-L^6-4L^5+2L^4"},
                {"n":2,"lambda":0,"kind":"BS","motive":"L^9+L^8+2L^7+3L^6-6L^5+2L^4"}]})";
    }
    const Run r = run("induct --table " + path + " --n 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"delta_over_gl\"") != std::string::npos);
    CHECK(r.out.find("(L^8 + 3*L^7 - 2*L^6 - 2*L^5 + L^4)/(L^3 - L^2 - L + 1)") != std::string::npos);
    CHECK(run("induct --table missing.json --n 2").status == 2);
    std::remove(path.c_str());
}

TEST_CASE("json output is deterministic across worker counts") {
    const Run a = run("verify --case quantum --primes 5,7 --jobs 1");
    const Run b = run("verify --case quantum --primes 5,7 --jobs 3");
    CHECK(a.out == b.out);
}
