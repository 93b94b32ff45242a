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

#include <mdt/counting.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include <mdt/error.hpp>

namespace mdt {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxModulus = u64{1} << 31;
constexpr double kMaxOuterPoints = 2e11;

u64 power_mod(u64 base, u64 exp, u64 p) {
    u64 result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

void require_prime(u64 q) {
    if (!is_prime(q)) throw Error(ErrorCode::bad_prime, std::to_string(q) + " is not a prime");
    if (q >= kMaxModulus) throw Error(ErrorCode::bad_prime, std::to_string(q) + " is too large for modular counting");
}

u64 reduce_mod(const mpq_class& c, u64 p) {
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class den = c.get_den() % pz;
    if (den == 0)
        throw Error(ErrorCode::bad_prime, "coefficient " + c.get_str() + " has a denominator divisible by " + pz.get_str());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = c.get_num() * inv % pz;
    if (r < 0) r += pz;
    return r.get_ui();
}

bool characteristic_sensitive(const Polynomial& eq, u64 p) {
    const mpz_class pz(static_cast<unsigned long>(p));
    return std::any_of(eq.terms().begin(), eq.terms().end(), [&](const auto& t) {
        const mpz_class num = t.second.get_num();
        return num % pz == 0;
    });
}

mpz_class power(u64 q, unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, k);
    return r;
}

/// A polynomial reduced mod p, with every variable mapped either to a slot of
/// the enumerated point or to a linear coefficient bucket.
struct ModPoly {
    struct Term {
        u64 coef;
        std::vector<std::pair<std::size_t, unsigned>> factors;
        int bucket; // -1: constant part, otherwise linear variable index
    };
    std::vector<Term> terms;
    u64 p = 0;

    static ModPoly compile(const Polynomial& poly, const std::vector<std::string>& slots,
                           const std::vector<std::string>& linear, u64 p) {
        ModPoly out;
        out.p = p;
        for (const auto& [e, c] : poly.terms()) {
            Term t{reduce_mod(c, p), {}, -1};
            if (t.coef == 0) continue;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const std::string& name = poly.variables()[i];
                const auto lin = std::find(linear.begin(), linear.end(), name);
                if (lin != linear.end()) {
                    t.bucket = static_cast<int>(lin - linear.begin());
                    continue;
                }
                const auto slot = std::find(slots.begin(), slots.end(), name);
                if (slot == slots.end())
                    throw Error(ErrorCode::invalid_argument, "variable '" + name + "' is neither enumerated nor free");
                t.factors.emplace_back(static_cast<std::size_t>(slot - slots.begin()), e[i]);
            }
            out.terms.push_back(std::move(t));
        }
        return out;
    }

    u64 term_value(const Term& t, const u64* point) const {
        u64 v = t.coef;
        for (const auto& [slot, e] : t.factors)
            for (unsigned k = 0; k < e; ++k) v = v * point[slot] % p;
        return v;
    }

    u64 eval(const u64* point) const {
        u64 acc = 0;
        for (const Term& t : terms) acc = (acc + term_value(t, point)) % p;
        return acc;
    }
};

/// Runs body(first_value, partial) for first_value = shard, shard + jobs, ...
/// on `jobs` threads and returns the partials in shard order.
template <class Partial, class Body>
std::vector<Partial> run_shards(u64 q, unsigned jobs, Body body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(q)));
    std::vector<Partial> partials(jobs);
    auto work = [&](unsigned shard) {
        for (u64 v = shard; v < q; v += jobs) body(v, partials[shard]);
    };
    if (jobs == 1) {
        work(0);
        return partials;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(work, s);
    for (auto& t : threads) t.join();
    return partials;
}

/// Advances point[from..] as an odometer in base q; false when it wraps.
bool advance(std::vector<u64>& point, std::size_t from, u64 q) {
    for (std::size_t i = point.size(); i-- > from;) {
        if (++point[i] < q) return true;
        point[i] = 0;
    }
    return false;
}

unsigned rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    unsigned rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const u64 inv = power_mod(m[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const u64 f = m[r][col] * inv % p;
            for (std::size_t c = col; c < cols; ++c) m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::string> choose_linear_vars(const Polynomial& eq, const std::vector<std::string>& requested) {
    const std::vector<std::string> used = eq.used_variables();
    auto cooccur = [&](const std::string& a, const std::string& b) {
        const std::size_t ia = eq.require_index(a), ib = eq.require_index(b);
        return std::any_of(eq.terms().begin(), eq.terms().end(),
                           [&](const auto& t) { return t.first[ia] > 0 && t.first[ib] > 0; });
    };

    if (!requested.empty()) {
        for (std::size_t i = 0; i < requested.size(); ++i) {
            const std::string& v = requested[i];
            if (!eq.index_of(v)) throw Error(ErrorCode::not_linear, "unknown variable '" + v + "'");
            if (eq.degree_in(v) > 1) throw Error(ErrorCode::not_linear, "'" + v + "' occurs with degree > 1");
            for (std::size_t j = 0; j < i; ++j)
                if (cooccur(v, requested[j]))
                    throw Error(ErrorCode::not_linear, "'" + v + "' and '" + requested[j] + "' share a monomial");
        }
        return requested;
    }

    std::vector<std::string> candidates;
    for (const auto& v : used)
        if (eq.degree_in(v) == 1) candidates.push_back(v);
    std::size_t n = candidates.size();
    if (n > 20) candidates.resize(n = 20);
    std::vector<std::uint32_t> conflicts(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && cooccur(candidates[i], candidates[j])) conflicts[i] |= 1u << j;

    std::uint32_t best = 0;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best_size) continue;
        bool independent = true;
        for (std::size_t i = 0; i < n && independent; ++i)
            if ((mask >> i & 1) && (conflicts[i] & mask)) independent = false;
        if (independent) {
            best = mask;
            best_size = size;
        }
    }
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < n; ++i)
        if (best >> i & 1) chosen.push_back(candidates[i]);
    return chosen;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

bool is_prime(std::uint64_t q) noexcept {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

CountResult count_points(const StratumSpec& spec, std::uint64_t q, std::uint64_t lambda, const CountOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    require_prime(q);
    lambda %= q;
    const Polynomial& eq = spec.equation;
    for (const auto& v : eq.used_variables())
        if (std::find(spec.variables.begin(), spec.variables.end(), v) == spec.variables.end())
            throw Error(ErrorCode::invalid_argument, "equation uses '" + v + "', which is not a free variable");

    CountResult result;
    result.characteristic_sensitive = characteristic_sensitive(eq, q);
    result.linear_vars = choose_linear_vars(eq, options.linear_vars);
    const std::vector<std::string>& linear = result.linear_vars;

    std::vector<std::string> outer;
    for (const auto& v : eq.used_variables())
        if (std::find(linear.begin(), linear.end(), v) == linear.end()) outer.push_back(v);
    const unsigned absent = spec.dim() - static_cast<unsigned>(eq.used_variables().size());
    if (std::pow(static_cast<double>(q), static_cast<double>(outer.size())) > kMaxOuterPoints)
        throw Error(ErrorCode::invalid_argument, "enumeration of " + std::to_string(outer.size()) + " variables over F_" +
                                                     std::to_string(q) + " is too large");

    const ModPoly poly = ModPoly::compile(eq, outer, linear, q);
    const std::size_t nlin = linear.size();

    struct Partial {
        u64 some_linear = 0; // assignments where a linear coefficient is nonzero
        u64 constant_hit = 0; // all linear coefficients vanish and c_0 = lambda
    };
    auto visit = [&](std::vector<u64>& point, Partial& part) {
        std::vector<u64> buckets(nlin + 1, 0);
        do {
            std::fill(buckets.begin(), buckets.end(), 0);
            for (const auto& t : poly.terms) {
                u64& b = buckets[static_cast<std::size_t>(t.bucket + 1)];
                b = (b + poly.term_value(t, point.data())) % q;
            }
            if (std::any_of(buckets.begin() + 1, buckets.end(), [](u64 c) { return c != 0; }))
                ++part.some_linear;
            else if (buckets[0] == lambda)
                ++part.constant_hit;
        } while (advance(point, 1, q));
    };

    Partial total;
    if (outer.empty()) {
        std::vector<u64> point;
        std::vector<u64> buckets(nlin + 1, 0);
        for (const auto& t : poly.terms) {
            u64& b = buckets[static_cast<std::size_t>(t.bucket + 1)];
            b = (b + t.coef) % q;
        }
        if (std::any_of(buckets.begin() + 1, buckets.end(), [](u64 c) { return c != 0; }))
            total.some_linear = 1;
        else if (buckets[0] == lambda)
            total.constant_hit = 1;
    } else {
        const auto partials = run_shards<Partial>(q, options.jobs, [&](u64 first, Partial& part) {
            std::vector<u64> point(outer.size(), 0);
            point[0] = first;
            visit(point, part);
        });
        for (const auto& p : partials) {
            total.some_linear += p.some_linear;
            total.constant_hit += p.constant_hit;
        }
    }

    const unsigned l = static_cast<unsigned>(nlin);
    mpz_class count = mpz_class(static_cast<unsigned long>(total.constant_hit)) * power(q, l);
    if (l > 0) count += mpz_class(static_cast<unsigned long>(total.some_linear)) * power(q, l - 1);
    result.count = count * power(q, absent);
    result.elapsed_ms = elapsed_since(start);
    return result;
}

mpz_class count_naive(const StratumSpec& spec, std::uint64_t q, std::uint64_t lambda) {
    require_prime(q);
    lambda %= q;
    if (std::pow(static_cast<double>(q), static_cast<double>(spec.dim())) > static_cast<double>(1 << 26))
        throw Error(ErrorCode::invalid_argument, "naive enumeration is too large");
    const ModPoly poly = ModPoly::compile(spec.equation, spec.variables, {}, q);
    std::vector<u64> point(spec.dim(), 0);
    mpz_class count = 0;
    do {
        if (poly.eval(point.data()) == lambda) ++count;
    } while (advance(point, 0, q));
    return count;
}

CountResult count_fiber(const Superpotential& w, unsigned n, std::uint64_t q, std::uint64_t lambda, unsigned jobs) {
    if (w.letters() == 3 && n == 2) return count_fiber_n2(w, q, lambda, jobs);
    CountOptions options;
    options.jobs = jobs;
    return count_points(fiber_spec(w, n, 0), q, lambda, options);
}

CountResult count_fiber_n2(const Superpotential& w, std::uint64_t q, std::uint64_t lambda, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    require_prime(q);
    lambda %= q;
    const Polynomial trace = trace_expand(w, 2);
    const BlockDecomposition blocks = block_decompose(trace);
    const std::vector<std::string> diag(BlockDecomposition::diagonal.begin(), BlockDecomposition::diagonal.end());

    const ModPoly cubic = ModPoly::compile(blocks.cubic, diag, {}, q);
    std::array<std::array<ModPoly, 3>, 3> linear;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) linear[a][b] = ModPoly::compile(blocks.linear[a][b], diag, {}, q);

    // hits[r][0]: rank r and c = lambda; hits[r][1]: rank r and c != lambda.
    using Partial = std::array<std::array<u64, 2>, 4>;
    const auto partials = run_shards<Partial>(q, jobs, [&](u64 first, Partial& part) {
        std::vector<u64> point(diag.size(), 0);
        point[0] = first;
        std::vector<std::vector<u64>> m(3, std::vector<u64>(3));
        do {
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) m[a][b] = linear[a][b].eval(point.data());
            const unsigned r = rank_mod_p(m, q);
            ++part[r][cubic.eval(point.data()) == lambda ? 0 : 1];
        } while (advance(point, 1, q));
    });

    // #{(l, u) in F_q^r x F_q^r : l . u = d} is q^{2r-1} + q^r - q^{r-1} for
    // d = 0 and q^{2r-1} - q^{r-1} otherwise; the 3 - r dead coordinates on
    // each side are free.
    mpz_class count = 0;
    for (unsigned r = 0; r <= 3; ++r) {
        u64 zero = 0, nonzero = 0;
        for (const auto& p : partials) {
            zero += p[r][0];
            nonzero += p[r][1];
        }
        mpz_class n_zero, n_nonzero;
        if (r == 0) {
            n_zero = 1;
            n_nonzero = 0;
        } else {
            n_zero = power(q, 2 * r - 1) + power(q, r) - power(q, r - 1);
            n_nonzero = power(q, 2 * r - 1) - power(q, r - 1);
        }
        count += power(q, 2 * (3 - r)) * (mpz_class(static_cast<unsigned long>(zero)) * n_zero +
                                          mpz_class(static_cast<unsigned long>(nonzero)) * n_nonzero);
    }

    CountResult result;
    result.count = count;
    result.characteristic_sensitive = characteristic_sensitive(trace, q);
    result.linear_vars = {"q", "u", "y", "p", "t", "x"};
    result.elapsed_ms = elapsed_since(start);
    return result;
}

mpz_class count_anticommutator_rep2(std::uint64_t q) {
    require_prime(q);
    std::array<u64, 5> by_rank{};
    for (u64 a = 0; a < q; ++a)
        for (u64 b = 0; b < q; ++b)
            for (u64 c = 0; c < q; ++c)
                for (u64 d = 0; d < q; ++d) {
                    // Columns act on Y = [[e, f], [g, h]] in the order e, f, g, h.
                    const u64 s = (a + d) % q;
                    std::vector<std::vector<u64>> m{
                        {2 * a % q, c, b, 0},
                        {b, s, 0, b},
                        {c, 0, s, c},
                        {0, c, b, 2 * d % q},
                    };
                    ++by_rank[rank_mod_p(std::move(m), q)];
                }
    mpz_class count = 0;
    for (unsigned r = 0; r <= 4; ++r) count += mpz_class(static_cast<unsigned long>(by_rank[r])) * power(q, 4 - r);
    return count;
}

mpz_class count_anticommutator_rep2_naive(std::uint64_t q) {
    require_prime(q);
    if (q > 11) throw Error(ErrorCode::invalid_argument, "naive anticommutator count is limited to q <= 11");
    u64 count = 0;
    std::vector<u64> v(8, 0);
    do {
        const u64 a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7];
        if ((2 * a * e + b * g + c * f) % q == 0 && (2 * d * h + b * g + c * f) % q == 0 &&
            ((a + d) * f + b * (e + h)) % q == 0 && (c * (e + h) + (a + d) * g) % q == 0)
            ++count;
    } while (advance(v, 0, q));
    return mpz_class(static_cast<unsigned long>(count));
}

std::array<mpz_class, 3> count_dim_strata(const Superpotential& w, std::uint64_t q, std::uint64_t lambda) {
    require_prime(q);
    if (w.letters() != 3) throw Error(ErrorCode::invalid_argument, "dimension strata need three letters");
    if (std::pow(static_cast<double>(q), 12.0) > 1e7)
        throw Error(ErrorCode::invalid_argument, "dimension strata enumeration is limited to q^12 <= 10^7");
    lambda %= q;
    const Polynomial trace = trace_expand(w, 2);
    const ModPoly poly = ModPoly::compile(trace, trace.variables(), {}, q);

    std::array<u64, 3> counts{};
    std::vector<u64> point(12, 0);
    do {
        if (poly.eval(point.data()) != lambda) continue;
        ++counts[0];
        for (u64 v1 = 0; v1 < q; ++v1)
            for (u64 v2 = 0; v2 < q; ++v2) {
                if (v1 == 0 && v2 == 0) continue;
                bool invariant_line = true;
                for (std::size_t k = 0; k < 3 && invariant_line; ++k) {
                    const u64* m = point.data() + 4 * k; // row-major 2 x 2 block
                    const u64 w1 = (m[0] * v1 + m[1] * v2) % q;
                    const u64 w2 = (m[2] * v1 + m[3] * v2) % q;
                    invariant_line = (v1 * w2 + (q - v2) * w1) % q == 0;
                }
                ++counts[invariant_line ? 1 : 2];
            }
    } while (advance(point, 0, q));
    return {mpz_class(static_cast<unsigned long>(counts[0])), mpz_class(static_cast<unsigned long>(counts[1])),
            mpz_class(static_cast<unsigned long>(counts[2]))};
}

MotiveClass fit_count_polynomial(const std::vector<std::pair<std::uint64_t, mpz_class>>& samples, unsigned degree_bound) {
    if (samples.size() < degree_bound + 1u)
        throw Error(ErrorCode::invalid_argument, "need at least " + std::to_string(degree_bound + 1) + " samples");
    const std::size_t n = samples.size();
    std::vector<mpq_class> x(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = mpz_class(static_cast<unsigned long>(samples[i].first));
        dd[i] = samples[i].second;
        for (std::size_t j = 0; j < i; ++j)
            if (x[j] == x[i]) throw Error(ErrorCode::invalid_argument, "repeated sample point");
    }
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

    // Horner on the Newton form.
    std::vector<mpq_class> coeffs{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<mpq_class> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * x[k];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() - 1 > degree_bound)
        throw Error(ErrorCode::non_integral_fit, "interpolant has degree " + std::to_string(coeffs.size() - 1) +
                                                     " > " + std::to_string(degree_bound));
    MotiveClass out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].get_den() != 1)
            throw Error(ErrorCode::non_integral_fit, "coefficient of L^" + std::to_string(i) + " is " + coeffs[i].get_str());
        out += MotiveClass::monomial(2 * static_cast<std::int64_t>(i), EquivTag::unit, coeffs[i].get_num());
    }
    return out;
}

const char* to_string(LambdaClass c) noexcept {
    switch (c) {
    case LambdaClass::zero: return "zero";
    case LambdaClass::cubic_class_0: return "cubic-class-0";
    case LambdaClass::cubic_class_1: return "cubic-class-1";
    case LambdaClass::cubic_class_2: return "cubic-class-2";
    case LambdaClass::unit: return "unit";
    }
    return "?";
}

std::vector<LambdaClass> lambda_classes(std::uint64_t q, bool include_zero) {
    std::vector<LambdaClass> out;
    if (include_zero) out.push_back(LambdaClass::zero);
    if (q % 3 == 1) {
        out.insert(out.end(), {LambdaClass::cubic_class_0, LambdaClass::cubic_class_1, LambdaClass::cubic_class_2});
    } else {
        out.push_back(LambdaClass::unit);
    }
    return out;
}

namespace {

u64 primitive_root(u64 q) {
    std::vector<u64> factors;
    u64 m = q - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < q; ++g)
        if (std::all_of(factors.begin(), factors.end(), [&](u64 f) { return power_mod(g, (q - 1) / f, q) != 1; }))
            return g;
    return 1;
}

} // namespace

std::uint64_t lambda_representative(LambdaClass c, std::uint64_t q) {
    require_prime(q);
    switch (c) {
    case LambdaClass::zero: return 0;
    case LambdaClass::unit:
        if (q % 3 == 1) throw Error(ErrorCode::invalid_argument, "F_q* has three cubic classes for q = 1 mod 3");
        return 1 % q;
    default: break;
    }
    if (q % 3 != 1) throw Error(ErrorCode::invalid_argument, "cubic classes only exist for q = 1 mod 3");
    const unsigned j = c == LambdaClass::cubic_class_0 ? 0 : c == LambdaClass::cubic_class_1 ? 1 : 2;
    return power_mod(primitive_root(q), j, q);
}

LambdaClass classify_lambda(std::uint64_t lambda, std::uint64_t q) {
    require_prime(q);
    lambda %= q;
    if (lambda == 0) return LambdaClass::zero;
    if (q % 3 != 1) return LambdaClass::unit;
    const u64 character = power_mod(lambda, (q - 1) / 3, q);
    const u64 g = power_mod(primitive_root(q), (q - 1) / 3, q);
    if (character == 1) return LambdaClass::cubic_class_0;
    return character == g ? LambdaClass::cubic_class_1 : LambdaClass::cubic_class_2;
}

unsigned cube_roots_of_unity(std::uint64_t q) noexcept { return q % 3 == 1 ? 3 : 1; }

mpz_class evaluate_convolution(const MotiveClass& p, std::uint64_t q, int mu3_count) {
    const MotiveClass folded = p.component(EquivTag::unit) +
                               (p.component(EquivTag::mtilde) + p.component(EquivTag::mtilde2)) * MotiveClass::mtilde();
    return evaluate(folded, q, mu3_count);
}

Report verify_motive_against_counts(const MotiveClass& p, const Counter& counter, unsigned lambda_tag,
                                    const std::vector<std::uint64_t>& primes, const std::string& location,
                                    ProductConvention convention) {
    Report report;
    const bool mixed = p.has_tag(EquivTag::mtilde) && p.has_tag(EquivTag::mtilde2);
    for (const std::uint64_t q : primes) {
        const std::string where = location + " q=" + std::to_string(q);
        auto status = [](bool ok, bool sensitive) {
            return ok ? CheckStatus::pass : sensitive ? CheckStatus::warn : CheckStatus::fail;
        };

        if (lambda_tag == 0) {
            const CountResult r = counter(q, 0);
            const int c = static_cast<int>(cube_roots_of_unity(q));
            const bool folded = convention == ProductConvention::convolution;
            const mpz_class expected = folded ? evaluate_convolution(p, q, c) : evaluate(p, q, c);
            report.add({folded ? "count-convolution" : "count", status(r.count == expected, r.characteristic_sensitive), r.count.get_str(),
                        expected.get_str(), where + " lambda=zero"});
            continue;
        }

        if (q % 3 != 1) {
            const CountResult r = counter(q, 1);
            const mpz_class expected = evaluate(p, q, 1);
            report.add({"count", status(r.count == expected, r.characteristic_sensitive), r.count.get_str(),
                        expected.get_str(), where + " lambda=unit"});
            continue;
        }

        if (mixed) {
            report.add({"count", CheckStatus::skip, "-", to_string(p), where + " cubic classes (mixed M~ and M~^2)"});
            continue;
        }
        std::vector<mpz_class> got, want{evaluate(p, q, 3), evaluate(p, q, 0), evaluate(p, q, 0)};
        bool sensitive = false;
        for (LambdaClass c : lambda_classes(q, false)) {
            const CountResult r = counter(q, lambda_representative(c, q));
            got.push_back(r.count);
            sensitive = sensitive || r.characteristic_sensitive;
        }
        const std::string got_text = got[0].get_str() + "," + got[1].get_str() + "," + got[2].get_str();
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        report.add({"count-multiset", status(got == want, sensitive), got_text,
                    want[0].get_str() + "," + want[1].get_str() + "," + want[2].get_str(), where + " cubic classes"});
    }
    return report;
}

} // namespace mdt
