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

#include <mdt/verify.hpp>

#include <mdt/counting.hpp>
#include <mdt/error.hpp>
#include <mdt/expression.hpp>
#include <mdt/pipeline.hpp>
#include <mdt/series.hpp>
#include <mdt/superpotential.hpp>

namespace mdt {

namespace {

Superpotential potential_of(Case c) { return parse_potential(potential_text(c)); }

std::string lambda_label(unsigned lambda) { return "(" + std::to_string(lambda) + ")"; }

void add_equal(Report& report, const std::string& check, const MotiveRatio& got, const MotiveRatio& want,
               const std::string& where) {
    report.add(check, got == want, to_string(got), to_string(want), where);
}

Counter cell_sum_counter(const std::array<StratumSpec, 3>& cells, unsigned jobs) {
    return [cells, jobs](std::uint64_t q, std::uint64_t lambda) {
        CountResult total;
        for (const auto& cell : cells) {
            const CountResult r = count_points(cell, q, lambda, {jobs, {}});
            total.count += r.count;
            total.characteristic_sensitive = total.characteristic_sensitive || r.characteristic_sensitive;
        }
        return total;
    };
}

StratumSpec locus(std::string name, std::vector<std::string> vars, const std::string& equation) {
    StratumSpec spec;
    spec.name = std::move(name);
    spec.variables = vars;
    spec.equation = parse_polynomial(equation, vars);
    spec.rhs = 0;
    for (const auto& v : vars) spec.weights[v] = 1;
    return spec;
}

} // namespace

std::vector<std::uint64_t> default_primes(Case c) {
    return c == Case::quantum ? std::vector<std::uint64_t>{2, 5, 7} : std::vector<std::uint64_t>{5, 7, 13};
}

void check_primes(Case c, const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw Error(ErrorCode::invalid_argument, "no primes given");
    for (const std::uint64_t q : primes) {
        if (!is_prime(q)) throw Error(ErrorCode::bad_prime, std::to_string(q) + " is not prime");
        if (c == Case::weyl && q == 3)
            throw Error(ErrorCode::bad_prime, "q = 3 divides a denominator of the Weyl potential");
    }
}

Report verify_cell_equations(Case c) {
    Report report;
    const auto w = potential_of(c);
    const auto shown = displayed_cell_equations(c);
    for (unsigned lambda : {1u, 0u}) {
        const auto cells = cell_equations(w, lambda);
        for (std::size_t k = 0; k < 3; ++k) {
            const Polynomial want = parse_polynomial(shown[k], cells[k].equation.variables());
            report.add("cell-equation", cells[k].equation == want && cells[k].rhs == lambda,
                       to_string(cells[k].equation) + " = " + std::to_string(cells[k].rhs),
                       to_string(want) + " = " + std::to_string(lambda), cells[k].name + lambda_label(lambda));
        }
    }
    return report;
}

Report verify_strata_counts(Case c, const std::vector<std::uint64_t>& primes, unsigned jobs) {
    Report report;
    const auto w = potential_of(c);
    for (unsigned lambda : {1u, 0u}) {
        const auto cells = cell_equations(w, lambda);
        if (c == Case::weyl || lambda == 1) {
            for (std::size_t k = 0; k < 3; ++k) {
                const std::string label = cells[k].name + lambda_label(lambda);
                const StratumSpec spec = cells[k];
                const Counter counter = [spec, jobs](std::uint64_t q, std::uint64_t l) {
                    return count_points(spec, q, l, {jobs, {}});
                };
                report.append(verify_motive_against_counts(catalog_class(c, label), counter, lambda, primes, label));
            }
        }
        const std::string label = "BS2" + lambda_label(lambda);
        report.append(verify_motive_against_counts(catalog_class(c, label), cell_sum_counter(cells, jobs), lambda,
                                                   primes, label + " cells"));
    }

    const auto params = potential_params(w);
    const StratumSpec bracket = s3_bracket_spec(params);
    const Counter counter = [bracket, jobs](std::uint64_t q, std::uint64_t l) {
        return count_points(bracket, q, l, {jobs, {}});
    };
    report.append(verify_motive_against_counts(catalog_class(c, "S3-bracket"), counter, 1, primes, "S3 bracket"));

    if (c == Case::quantum) {
        const StratumSpec cone = locus("Gr(2,4) cone", {"y", "v", "b", "g", "f", "c"}, "yv+bg+fc");
        const StratumSpec puy = locus("vz=puy", {"v", "z", "p", "u", "y"}, "vz-puy");
        for (const auto* spec : {&cone, &puy}) {
            const StratumSpec s = *spec;
            const Counter count = [s, jobs](std::uint64_t q, std::uint64_t l) { return count_points(s, q, l, {jobs, {}}); };
            const std::string label = s.name == "vz=puy" ? "vz=puy" : "Gr(2,4)-cone";
            report.append(verify_motive_against_counts(catalog_class(c, label), count, 0, primes, s.name));
        }
    }
    return report;
}

Report verify_induction(Case c) {
    Report report;
    const MotiveTable table = catalog_table(c);
    const MotiveClass gl2 = gl_motive(2);

    const MotiveClass m1 = induct_fiber(2, 1, table);
    const MotiveClass m0 = induct_fiber(2, 0, table);
    if (c == Case::quantum) {
        add_equal(report, "induct-fiber", m1, catalog_entry(c, "M2(1)").value, "M2(1)");
        add_equal(report, "induct-fiber", m0, catalog_entry(c, "M2(0)").value, "M2(0)");
    }
    const MotiveRatio delta = induct_delta(2, table);
    add_equal(report, "delta-difference", MotiveRatio(m0 - m1), delta * MotiveRatio(gl2), "M2(0) - M2(1)");
    if (c == Case::quantum) {
        add_equal(report, "induct-delta", delta * MotiveRatio(gl2), catalog_entry(c, "dM2").value, "dM2");
        add_equal(report, "induct-delta", catalog_entry(c, "dM2").value, catalog_entry(c, "dM2-from-Exp").value,
                  "dM2 two forms");
    } else {
        add_equal(report, "induct-delta", delta * MotiveRatio(parse_motive("L^2-1")),
                  catalog_entry(c, "(L^2-1)dM2/GL2").value, "(L^2-1) dM2/GL2");
        add_equal(report, "induct-delta", catalog_entry(c, "BS2(0)").value - catalog_entry(c, "BS2(1)").value,
                  catalog_entry(c, "dBS2").value, "dBS2");
        add_equal(report, "induct-delta", catalog_entry(c, "M1(0)").value - catalog_entry(c, "M1(1)").value,
                  catalog_entry(c, "dM1").value, "dM1");
    }

    const auto params = potential_params(potential_of(c));
    add_equal(report, "prop-s3", prop_s3_motive(params, catalog_class(c, "S3-bracket")), catalog_entry(c, "S3(1)").value,
              "S3(1)");

    const Series u = u_series(table, 2);
    add_equal(report, "u-series", u[1], catalog_entry(c, "U1").value, "t^1");
    add_equal(report, "u-series", u[2], catalog_entry(c, "U2").value, "t^2");
    const Series e = pleth_exp(parse_series(conjectured_bracket(c), 2), 2);
    for (unsigned k = 1; k <= 2; ++k)
        add_equal(report, "exp-bracket", e[k], u[k], "t^" + std::to_string(k));

    report.append(functional_equation_check(catalog_table(c, true), 2));
    return report;
}

Report verify_fiber_counts(Case c, const std::vector<std::uint64_t>& primes, unsigned jobs) {
    Report report;
    const auto w = potential_of(c);
    const MotiveTable table = catalog_table(c, true);
    const Counter fiber1 = [w, jobs](std::uint64_t q, std::uint64_t l) { return count_fiber(w, 1, q, l, jobs); };
    const Counter fiber2 = [w, jobs](std::uint64_t q, std::uint64_t l) { return count_fiber_n2(w, q, l, jobs); };
    for (unsigned lambda : {1u, 0u}) {
        const std::string label = lambda_label(lambda);
        report.append(verify_motive_against_counts(fiber_motive(1, lambda, table), fiber1, lambda, primes, "M1" + label));
        const auto convention = c == Case::weyl ? ProductConvention::convolution : ProductConvention::pointwise;
        report.append(verify_motive_against_counts(fiber_motive(2, lambda, table), fiber2, lambda, primes, "M2" + label,
                                                   convention));
    }
    return report;
}

Report verify_dimensional_reduction(const std::vector<std::uint64_t>& primes) {
    Report report;
    std::vector<std::pair<std::uint64_t, mpz_class>> samples;
    for (const std::uint64_t q : primes) samples.emplace_back(q, count_anticommutator_rep2(q));
    const MotiveClass rep2 = fit_count_polynomial(samples, static_cast<unsigned>(primes.size()) - 2);
    std::string where = "q=";
    for (std::size_t i = 0; i < primes.size(); ++i) where += (i ? "," : "") + std::to_string(primes[i]);
    add_equal(report, "rep2-interpolation", rep2, catalog_entry(Case::quantum, "rep2").value, where);
    report.append(dimensional_reduction_check(catalog_table(Case::quantum, true), rep2));
    return report;
}

Report verify_shadow(const std::vector<std::uint64_t>& primes) {
    Report report;
    const auto w = potential_of(Case::quantum);
    const MotiveTable table = catalog_table(Case::quantum, true);
    for (const std::uint64_t q : primes) {
        const mpz_class gl2 = evaluate(gl_motive(2), q, 1);
        for (unsigned lambda : {1u, 0u}) {
            const std::string where = "q=" + std::to_string(q) + " lambda=" + std::to_string(lambda);
            const auto strata = count_dim_strata(w, q, lambda);

            const CountResult fiber = count_fiber_n2(w, q, lambda);
            mpz_class sum1 = 0;
            for (std::uint64_t mu = 0; mu < q; ++mu) {
                const std::uint64_t rest = (lambda + q - mu) % q;
                sum1 += count_fiber(w, 1, q, mu).count * count_fiber(w, 1, q, rest).count;
            }
            const mpz_class x1 = gl2 * q * q * sum1 / (q - 1);
            CountResult cells = cell_sum_counter(cell_equations(w, lambda), 1)(q, lambda);
            const mpz_class x2 = gl2 * cells.count;

            const std::array<mpz_class, 3> predicted{fiber.count, x1, x2};
            for (unsigned k = 0; k < 3; ++k) {
                report.add("shadow-count", strata[k] == predicted[k], strata[k].get_str(), predicted[k].get_str(),
                           "X" + std::to_string(k) + " " + where);
                const mpz_class motive = evaluate(stratum_motive(k, 2, lambda, table), q, 1);
                const bool ok = strata[k] == motive;
                const bool sensitive = k == 0 ? fiber.characteristic_sensitive : cells.characteristic_sensitive;
                report.add({"shadow-motive", ok ? CheckStatus::pass : sensitive ? CheckStatus::warn : CheckStatus::fail,
                            strata[k].get_str(), motive.get_str(), "X" + std::to_string(k) + " " + where});
            }
        }
    }
    return report;
}

Report run_verification(Case c, const VerifyOptions& options) {
    const auto primes = options.primes.empty() ? default_primes(c) : options.primes;
    check_primes(c, primes);
    Report report;
    report.append(verify_cell_equations(c));
    report.append(verify_induction(c));
    report.append(verify_strata_counts(c, primes, options.jobs));
    report.append(verify_fiber_counts(c, primes, options.jobs));
    if (c == Case::quantum) {
        report.append(verify_dimensional_reduction({5, 7, 11, 13, 17, 19, 23}));
        report.append(verify_shadow({2, 3}));
    }
    return report;
}

} // namespace mdt
