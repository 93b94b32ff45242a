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

#include <mdt/pipeline.hpp>

namespace mdt {

namespace {

MotiveClass lefschetz_minus_one(unsigned n) { return MotiveClass::lefschetz(n) - MotiveClass(1); }

std::string order_label(unsigned n) { return "t^" + std::to_string(n); }

MotiveRatio fiber_over_gl(unsigned n, unsigned lambda, const MotiveTable& table) {
    return MotiveRatio(fiber_motive(n, lambda, table), gl_motive(n));
}

/// M_n(0) - M_n(1).
MotiveRatio delta_fiber(unsigned n, const MotiveTable& table) {
    if (table.has(n, 0, EntryKind::fiber) && table.has(n, 1, EntryKind::fiber))
        return table.get(n, 0, EntryKind::fiber) - table.get(n, 1, EntryKind::fiber);
    return induct_delta(n, table) * MotiveRatio(gl_motive(n));
}

} // namespace

const char* to_string(EntryKind kind) noexcept { return kind == EntryKind::fiber ? "FIBER" : "BS"; }

void MotiveTable::set(unsigned n, unsigned lambda, EntryKind kind, MotiveClass value) {
    if (n == 0 || lambda > 1) throw Error(ErrorCode::invalid_argument, "table keys need n >= 1 and lambda in {0, 1}");
    entries_[{n, lambda, kind}] = std::move(value);
}

bool MotiveTable::has(unsigned n, unsigned lambda, EntryKind kind) const {
    if (entries_.count({n, lambda, kind})) return true;
    const EntryKind other = kind == EntryKind::fiber ? EntryKind::bs : EntryKind::fiber;
    return n == 1 && entries_.count({n, lambda, other});
}

const MotiveClass& MotiveTable::get(unsigned n, unsigned lambda, EntryKind kind) const {
    if (auto it = entries_.find({n, lambda, kind}); it != entries_.end()) return it->second;
    if (n == 1) {
        const EntryKind other = kind == EntryKind::fiber ? EntryKind::bs : EntryKind::fiber;
        if (auto it = entries_.find({n, lambda, other}); it != entries_.end()) return it->second;
    }
    throw Error(ErrorCode::missing_entry, std::string(to_string(kind)) + " n=" + std::to_string(n) +
                                              " lambda=" + std::to_string(lambda));
}

MotiveClass stratum_motive(unsigned k, unsigned n, unsigned lambda, const MotiveTable& table) {
    if (lambda > 1) throw Error(ErrorCode::invalid_argument, "lambda tag must be 0 or 1");
    if (k > n) throw Error(ErrorCode::invalid_argument, "stratum index k exceeds n");
    if (k == 0) return table.get(n, lambda, EntryKind::fiber);
    if (k == n) return gl_motive(n) * table.get(n, lambda, EntryKind::bs);

    const unsigned rest = n - k;
    auto bs = [&](unsigned mu) { return table.get(k, mu, EntryKind::bs); };
    auto fiber = [&](unsigned mu) { return fiber_motive(rest, mu, table); };
    const MotiveClass L = MotiveClass::lefschetz(1);
    MotiveClass sum;
    if (lambda == 1)
        sum = (L - MotiveClass(2)) * bs(1) * fiber(1) + bs(0) * fiber(1) + bs(1) * fiber(0);
    else
        sum = (L - MotiveClass(1)) * bs(1) * fiber(1) + bs(0) * fiber(0);

    const auto twist = static_cast<std::int64_t>(table.m() - 1) * k * rest;
    return divide_exact(gl_motive(n) * MotiveClass::lefschetz(twist) * sum, gl_motive(rest),
                        "stratum k=" + std::to_string(k) + " n=" + std::to_string(n));
}

MotiveClass induct_fiber(unsigned n, unsigned lambda, const MotiveTable& table) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
    MotiveClass total = gl_motive(n) * table.get(n, lambda, EntryKind::bs);
    for (unsigned k = 1; k < n; ++k) total += stratum_motive(k, n, lambda, table);
    return divide_exact(total, lefschetz_minus_one(n), "fiber n=" + std::to_string(n));
}

MotiveClass fiber_motive(unsigned n, unsigned lambda, const MotiveTable& table) {
    if (table.has(n, lambda, EntryKind::fiber)) return table.get(n, lambda, EntryKind::fiber);
    return induct_fiber(n, lambda, table);
}

MotiveRatio induct_delta(unsigned n, const MotiveTable& table) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
    auto delta_bs = [&](unsigned k) {
        return MotiveRatio(table.get(k, 0, EntryKind::bs) - table.get(k, 1, EntryKind::bs));
    };
    MotiveRatio rhs = delta_bs(n);
    for (unsigned k = 1; k < n; ++k) {
        const auto twist = static_cast<std::int64_t>(table.m() - 1) * k * (n - k);
        rhs += MotiveRatio(MotiveClass::lefschetz(twist), gl_motive(n - k)) * delta_bs(k) * delta_fiber(n - k, table);
    }
    return rhs / MotiveRatio(lefschetz_minus_one(n));
}

Report functional_equation_check(const MotiveTable& table, unsigned order) {
    const unsigned twist = table.m() - 1;
    Series b0(order, twist), b1(order, twist), r0(order, twist), r1(order, twist), lhs(order, twist);
    for (unsigned n = 1; n <= order; ++n) {
        b0.set(n, table.get(n, 0, EntryKind::bs));
        b1.set(n, table.get(n, 1, EntryKind::bs));
        r0.set(n, fiber_over_gl(n, 0, table));
        r1.set(n, fiber_over_gl(n, 1, table));
        lhs.set(n, r1[n] * MotiveRatio(MotiveClass::lefschetz(n)));
    }
    const Series one = Series::constant(1, order, twist);
    lhs += one;
    const MotiveRatio l_minus_two = MotiveClass::lefschetz(1) - MotiveClass(2);
    const Series rhs = one + b1 + r1 + b0 * r1 + b1 * r0 + (b1 * r1) * l_minus_two;

    Report report;
    for (unsigned n = 1; n <= order; ++n)
        report.add("functional-equation", lhs[n] == rhs[n], to_string(lhs[n]), to_string(rhs[n]), order_label(n));
    return report;
}

Series u_series(const MotiveTable& table, unsigned order) {
    Series u = Series::constant(1, order);
    for (unsigned n = 1; n <= order; ++n) {
        const std::int64_t e2 = -static_cast<std::int64_t>(table.m() - 1) * n * n;
        if (e2 % 2 != 0)
            throw Error(ErrorCode::fractional_exponent, "normalisation L^{-(m-1)n^2/2} is a half power at n=" +
                                                            std::to_string(n));
        const MotiveRatio delta = table.has(n, 0, EntryKind::fiber) && table.has(n, 1, EntryKind::fiber)
                                      ? delta_fiber(n, table) / MotiveRatio(gl_motive(n))
                                      : induct_delta(n, table);
        u.set(n, delta * MotiveRatio(MotiveClass::lefschetz_half(e2)));
    }
    return u;
}

Report dimensional_reduction_check(const MotiveTable& table, const MotiveClass& rep2) {
    const MotiveClass m0 = fiber_motive(2, 0, table);
    const MotiveClass m1 = fiber_motive(2, 1, table);
    const MotiveClass total = MotiveClass::lefschetz(4 * table.m());
    const MotiveClass fibers = m0 + (MotiveClass::lefschetz(1) - MotiveClass(1)) * m1;
    const MotiveClass delta = m0 - m1;
    const MotiveClass reduced = MotiveClass::lefschetz(4) * rep2;
    Report report;
    report.add("fiber-partition", fibers == total, to_string(fibers), to_string(total), "n=2");
    report.add("dimensional-reduction", delta == reduced, to_string(delta), to_string(reduced), "n=2");
    return report;
}

MotiveClass prop_s3_motive(const PotentialParams& params, const MotiveClass& bracket) {
    if (params.delta != 1) throw Error(ErrorCode::assumption_violated, "needs delta = 1");
    if (params.epsilon == 0) throw Error(ErrorCode::assumption_violated, "needs epsilon != 0");
    const MotiveClass head = params.gamma != 0 ? MotiveClass::lefschetz(7) - MotiveClass::lefschetz(4)
                                               : MotiveClass::lefschetz(7) - MotiveClass::lefschetz(5);
    return head + MotiveClass::lefschetz(3) * bracket;
}

StratumSpec s3_bracket_spec(const PotentialParams& params) {
    if (params.epsilon == 0) throw Error(ErrorCode::assumption_violated, "needs epsilon != 0");
    const std::vector<std::string> vars{"n", "s", "z"};
    auto var = [&](const char* name) { return Polynomial::variable(vars, name); };
    // W on 1 x 1 matrices: alpha a^3 + beta b^3 + gamma c^3 + (delta + epsilon) abc.
    auto w1 = [&](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
        return params.alpha * a.pow(3) + params.beta * b.pow(3) + params.gamma * c.pow(3) +
               (params.delta + params.epsilon) * a * b * c;
    };
    const Polynomial zero(vars);
    const Polynomial z = params.gamma != 0 ? zero : var("z");
    StratumSpec spec;
    spec.name = "S3-bracket";
    spec.equation = w1(var("n"), var("s"), zero) +
                    w1(mpq_class(-1) / params.epsilon * var("n"), -params.epsilon * var("s"), z);
    spec.variables = params.gamma != 0 ? std::vector<std::string>{"n", "s"} : vars;
    spec.rhs = 1;
    for (const auto& v : spec.variables) spec.weights[v] = 1;
    return spec;
}

} // namespace mdt
