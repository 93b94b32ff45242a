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

// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact;
// the wall-clock limits are pinned in the table below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mdt/catalog.hpp>
#include <mdt/counting.hpp>
#include <mdt/expression.hpp>
#include <mdt/pipeline.hpp>
#include <mdt/series.hpp>
#include <mdt/verify.hpp>

using namespace mdt;

namespace {

constexpr double ac1_seconds_per_stratum = 60;
constexpr double ac2_seconds = 1;
constexpr double ac3_counting_seconds = 300;
constexpr double ac4_seconds = 1;
constexpr double ac5_seconds_per_stratum = 120;
constexpr double ac7_seconds = 120;
constexpr double ac8_seconds = 60;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, s < 10 ? "%.2fs" : "%.0fs", s);
    return buf;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << secs(seconds_since(start)) << ") "
              << o.detail << std::endl;
}

std::string describe_failure(const Report& r) {
    const CheckRecord* f = r.first_failure();
    if (f == nullptr) return {};
    return "first failure: " + f->check + " " + f->location + ": " + f->lhs + " != " + f->rhs;
}

// Runs one stratum through the residue protocol and times the slowest prime.
Outcome stratum(Case c, const StratumSpec& spec, const std::string& label, unsigned lambda,
                const std::vector<std::uint64_t>& primes, double limit, double& worst) {
    const Counter counter = [&](std::uint64_t q, std::uint64_t l) {
        const auto start = Clock::now();
        CountResult r = count_points(spec, q, l, {2, {}});
        worst = std::max(worst, seconds_since(start));
        return r;
    };
    const Report r = verify_motive_against_counts(catalog_class(c, label), counter, lambda, primes, label);
    Outcome o{r.passed() && worst < limit, ""};
    if (!r.passed()) o.detail = describe_failure(r);
    o.detail += label + ":" + std::to_string(r.count(CheckStatus::pass)) + "p/" +
                std::to_string(r.count(CheckStatus::warn)) + "w ";
    return o;
}

Outcome ac1() {
    const auto cells = cell_equations(parse_potential(potential_text(Case::quantum)), 1);
    Outcome all{true, ""};
    double worst = 0;
    for (unsigned k = 0; k < 3; ++k) {
        const Outcome o = stratum(Case::quantum, cells[k], cells[k].name + "(1)", 1, {2, 5, 7},
                                  ac1_seconds_per_stratum, worst);
        all.ok = all.ok && o.ok;
        all.detail += o.detail;
    }
    all.detail += "[exact at q=5,7; q=2 mismatches allowed only where 2rvz vanishes mod 2 (w); slowest count " +
                  secs(worst) + " < " + secs(ac1_seconds_per_stratum) + "]";
    return all;
}

Outcome ac2() {
    const auto start = Clock::now();
    const MotiveTable t = catalog_table(Case::quantum);
    const bool fiber = induct_fiber(2, 1, t) == parse_motive("L^11-L^8-3L^7+2L^6+2L^5-L^4");
    const bool delta = induct_delta(2, t) * MotiveRatio(gl_motive(2)) == parse_motive_ratio("L^4(L^5+3L^4-2L^3-2L^2+L)");
    const double s = seconds_since(start);
    return {fiber && delta && s < ac2_seconds, "[M2(1) " + std::string(fiber ? "=" : "!=") + ", dM2 " +
                                                   (delta ? "=" : "!=") + "; limit " + secs(ac2_seconds) + "]"};
}

Outcome ac3() {
    const auto start = Clock::now();
    const Report r = verify_dimensional_reduction({5, 7, 11, 13, 17, 19, 23});
    const double s = seconds_since(start);
    return {r.passed() && r.count(CheckStatus::pass) == 3 && s < ac3_counting_seconds,
            describe_failure(r) + "[rep2 interpolated from 7 primes 5..23 with one redundant point; L^12 partition; "
                                  "dM2 = L^4 rep2; limit " + secs(ac3_counting_seconds) + "]"};
}

Outcome ac4() {
    const auto start = Clock::now();
    const Series u = pleth_exp(parse_series(conjectured_bracket(Case::quantum), 2), 2);
    const bool ok = u[2] == parse_motive_ratio("(L^4+3L^3-2L^2-2L+1)/((L^2-1)(L-1))");
    const double s = seconds_since(start);
    return {ok && s < ac4_seconds, "[t^2 = " + to_string(u[2]) + "; limit " + secs(ac4_seconds) + "]"};
}

Outcome ac5() {
    const auto w = parse_potential(potential_text(Case::weyl));
    Outcome all{true, ""};
    double worst = 0;
    for (unsigned lambda : {1u, 0u}) {
        const auto cells = cell_equations(w, lambda);
        for (unsigned k = 0; k < 3; ++k) {
            double slowest = 0;
            const std::string label = cells[k].name + "(" + std::to_string(lambda) + ")";
            const Outcome o = stratum(Case::weyl, cells[k], label, lambda, {5, 7, 13}, ac5_seconds_per_stratum, slowest);
            worst = std::max(worst, slowest);
            all.ok = all.ok && o.ok;
            all.detail += o.detail;
        }
    }
    all.detail += "[q=5,7,13; slowest count " + secs(worst) + " < " + secs(ac5_seconds_per_stratum) + "]";
    return all;
}

Outcome ac6() {
    const Series u = u_series(catalog_table(Case::weyl), 2);
    const Series e = pleth_exp(parse_series(conjectured_bracket(Case::weyl), 2), 2);
    const MotiveRatio want = parse_motive_ratio("(L^3(L-1)+Mt L(L^2-1)+Mt2 L^2)/((L^2-1)(L-1))");
    const bool a = u[2] == want, b = e[2] == want;
    return {a && b, std::string("[u-series t^2 ") + (a ? "=" : "!=") + " displayed, Exp(bracket) t^2 " + (b ? "=" : "!=") +
                        " displayed; sigma2(M~) = L through psi2(M~) = 2L - M~^2]"};
}

Outcome ac7() {
    const auto start = Clock::now();
    Report r = functional_equation_check(catalog_table(Case::quantum, true), 2);
    r.append(functional_equation_check(catalog_table(Case::weyl), 2));
    const Report shadow = verify_shadow({2, 3});
    r.append(shadow);
    std::size_t exact = 0;
    for (const auto& rec : shadow.records())
        if (rec.check == "shadow-count" && rec.status == CheckStatus::pass) ++exact;
    const double s = seconds_since(start);
    return {r.passed() && exact == 12 && s < ac7_seconds,
            describe_failure(r) + "[functional equation to t^2 both cases; shadow counts exact " + std::to_string(exact) +
                "/12 at q=2,3; strata vs motive: q=3 exact, q=2 " + std::to_string(shadow.count(CheckStatus::warn)) +
                "w; limit " + secs(ac7_seconds) + "]"};
}

MotiveClass random_class(std::mt19937& rng, bool tagged, bool whole_powers = false) {
    std::uniform_int_distribution<int> coeff(-5, 5), e2(0, 10), tag(0, tagged ? 2 : 0);
    MotiveClass out;
    for (int i = 0; i < 5; ++i) {
        const int e = e2(rng);
        out.add_term({whole_powers ? 2 * (e / 2) : e, static_cast<EquivTag>(tag(rng))}, coeff(rng));
    }
    return out;
}

Outcome ac8() {
    const auto start = Clock::now();
    std::mt19937 rng(8);
    std::ostringstream detail;
    bool ok = true;

    std::size_t ring = 0;
    for (int i = 0; i < 300; ++i) {
        const MotiveClass a = random_class(rng, false), b = random_class(rng, false), c = random_class(rng, false);
        const MotiveClass t = random_class(rng, true);
        const bool pass = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a &&
                          (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (t + a) - a == t;
        ring += pass;
    }
    ok = ok && ring == 300;
    detail << "ring " << ring << "/300; ";

    std::size_t roundtrip = 0;
    const char* brackets[] = {"(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)", "L^2*t - t^3 + 1/(L+1)*t^4",
                              "-L^(1/2)*t/(1-t) + 3*t^5", "(L^3-1)/(L-1)*t^2"};
    for (const char* b : brackets) {
        const Series f = parse_series(b, 5);
        roundtrip += pleth_log(pleth_exp(f, 5), 5) == f;
    }
    ok = ok && roundtrip == 4;
    detail << "Exp/Log order 5 " << roundtrip << "/4; ";

    std::size_t hom = 0, hom_total = 0;
    for (int i = 0; i < 50; ++i) {
        const MotiveClass a = random_class(rng, false, true), b = random_class(rng, false, true);
        for (std::uint64_t q : {2u, 5u, 7u, 11u}) {
            ++hom_total;
            hom += evaluate(a * b, q, 1) == evaluate(a, q, 1) * evaluate(b, q, 1) &&
                   evaluate(a + b, q, 1) == evaluate(a, q, 1) + evaluate(b, q, 1);
        }
    }
    ok = ok && hom == hom_total;
    detail << "eval homomorphism " << hom << "/" << hom_total << "; ";

    std::size_t partition = 0;
    for (const char* text : {"XYZ + XZY", "XYZ - XZY - 1/3 XXX"}) {
        const auto w = parse_potential(text);
        for (std::uint64_t q : {2u, 5u}) {
            mpz_class total = 0, all;
            for (std::uint64_t l = 0; l < q; ++l) total += count_fiber_n2(w, q, l).count;
            mpz_ui_pow_ui(all.get_mpz_t(), q, 12);
            partition += total == all;
        }
    }
    ok = ok && partition == 4;
    detail << "partition " << partition << "/4; ";

    std::size_t scaling = 0, scaling_total = 0;
    const auto cells = cell_equations(parse_potential(potential_text(Case::weyl)), 1);
    for (std::uint64_t q : {5u, 7u}) {
        const mpz_class base = count_points(cells[2], q, 1).count;
        for (std::uint64_t c = 2; c < q; ++c) {
            ++scaling_total;
            scaling += count_points(cells[2], q, c * c % q * c % q).count == base;
        }
    }
    ok = ok && scaling == scaling_total;
    detail << "scaling " << scaling << "/" << scaling_total << "; ";

    std::size_t product = 0;
    for (const char* b : {"L/(L-1)*t", "(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)", "L^2*t + t^2"}) {
        const Series f = parse_series(b, 3);
        product += exp_product_form(f, 3, -4) == lefschetz_truncation(pleth_exp(f, 3), -4);
    }
    ok = ok && product == 3;
    detail << "product form " << product << "/3";

    const double s = seconds_since(start);
    detail << "; limit " << secs(ac8_seconds);
    return {ok && s < ac8_seconds, "[" + detail.str() + "]"};
}

} // namespace

int main() {
    report("AC1", "quantum BS strata by counting at q=2,5,7", ac1);
    report("AC2", "quantum induction n=2", ac2);
    report("AC3", "dimensional reduction with interpolated rep2", ac3);
    report("AC4", "Exp expansion t^2 (quantum)", ac4);
    report("AC5", "Weyl BS strata by the mu3 residue protocol", ac5);
    report("AC6", "Weyl u-series t^2 and Exp of the bracket", ac6);
    report("AC7", "functional equation and stratification shadow", ac7);
    report("AC8", "property suites", ac8);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
