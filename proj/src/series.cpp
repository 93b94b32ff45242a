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

#include <mdt/series.hpp>

#include <algorithm>
#include <ostream>

namespace mdt {

namespace {

void require_same_shape(const Series& a, const Series& b) {
    if (a.twist() != b.twist())
        throw Error(ErrorCode::twist_mismatch,
                    "twist " + std::to_string(a.twist()) + " vs " + std::to_string(b.twist()));
    if (a.order() != b.order())
        throw Error(ErrorCode::invalid_argument,
                    "truncation order " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

int moebius(unsigned n) {
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

void require_plethystic_input(const Series& s, unsigned order, const char* what) {
    if (s.twist() != 0) throw Error(ErrorCode::twist_mismatch, std::string(what) + " needs an untwisted series");
    if (s.order() < order)
        throw Error(ErrorCode::invalid_argument,
                    std::string(what) + " to order " + std::to_string(order) + " of a series known to order " +
                        std::to_string(s.order()));
    if (!s.truncated(order).is_tag_free() && order > 2)
        throw Error(ErrorCode::unsupported_adams,
                    std::string(what) + " of an M~-bearing series is only defined through t^2");
}

MotiveClass drop_below(const MotiveClass& a, std::int64_t min_e2) {
    MotiveClass out;
    for (const auto& [key, c] : a.terms())
        if (key.e2 >= min_e2) out.add_term(key, c);
    return out;
}

} // namespace

Series::Series(unsigned order, unsigned twist) : coeffs_(order + 1), twist_(twist) {}

Series Series::constant(const MotiveRatio& c, unsigned order, unsigned twist) {
    Series s(order, twist);
    s.coeffs_[0] = c;
    return s;
}

Series Series::monomial(const MotiveRatio& c, unsigned power, unsigned order, unsigned twist) {
    Series s(order, twist);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

bool Series::is_tag_free() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MotiveRatio& c) { return c.is_tag_free(); });
}

Series Series::truncated(unsigned order) const {
    Series s(order, twist_);
    for (unsigned i = 0; i <= std::min(order, this->order()); ++i) s.coeffs_[i] = coeffs_[i];
    return s;
}

Series Series::substitute_power(unsigned k) const {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "t -> t^0 is not a substitution");
    Series s(order(), twist_);
    for (unsigned i = 0; i * k <= order(); ++i) s.coeffs_[i * k] = coeffs_[i];
    return s;
}

Series Series::scale_variable(const MotiveClass& factor) const {
    Series s(order(), twist_);
    MotiveClass power(1);
    for (unsigned i = 0; i <= order(); ++i) {
        s.coeffs_[i] = coeffs_[i] * MotiveRatio(power);
        power *= factor;
    }
    return s;
}

Series Series::inverse() const {
    if (twist_ != 0) throw Error(ErrorCode::twist_mismatch, "inverse is only implemented for twist 0");
    if (coeffs_[0].is_zero()) throw Error(ErrorCode::invalid_argument, "series with zero constant term is not invertible");
    Series inv(order(), 0);
    const MotiveRatio a0_inv = MotiveRatio(1) / coeffs_[0];
    inv.coeffs_[0] = a0_inv;
    for (unsigned n = 1; n <= order(); ++n) {
        MotiveRatio acc;
        for (unsigned i = 1; i <= n; ++i)
            if (!coeffs_[i].is_zero() && !inv.coeffs_[n - i].is_zero()) acc += coeffs_[i] * inv.coeffs_[n - i];
        inv.coeffs_[n] = -(acc * a0_inv);
    }
    return inv;
}

Series& Series::operator+=(const Series& other) {
    require_same_shape(*this, other);
    for (unsigned i = 0; i <= order(); ++i)
        if (!other.coeffs_[i].is_zero()) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series& Series::operator*=(const MotiveRatio& scalar) {
    for (auto& c : coeffs_)
        if (!c.is_zero()) c *= scalar;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same_shape(a, b);
    Series out(a.order(), a.twist());
    for (unsigned i = 0; i <= a.order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            MotiveRatio term = a.coeffs_[i] * b.coeffs_[j];
            if (a.twist() != 0)
                term *= MotiveRatio(MotiveClass::lefschetz(static_cast<std::int64_t>(a.twist()) * i * j));
            out.coeffs_[i + j] += term;
        }
    }
    return out;
}

Series operator-(const Series& a) {
    Series out(a.order(), a.twist());
    for (unsigned i = 0; i <= a.order(); ++i) out.coeffs_[i] = -a.coeffs_[i];
    return out;
}

bool operator==(const Series& a, const Series& b) {
    if (a.twist_ != b.twist_ || a.order() != b.order()) return false;
    for (unsigned i = 0; i <= a.order(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
}

Series geometric_fraction(const MotiveRatio& a, unsigned period, unsigned order) {
    if (period == 0) throw Error(ErrorCode::invalid_argument, "geometric_fraction needs period >= 1");
    Series s(order, 0);
    for (unsigned i = period; i <= order; i += period) s.set(i, a);
    return s;
}

Series pleth_exp(const Series& f, unsigned order) {
    require_plethystic_input(f, order, "Exp");
    if (!f[0].is_zero()) throw Error(ErrorCode::invalid_argument, "Exp needs a series without constant term");

    // weighted[j] = j * [t^j] sum_k psi_k(f)(t^k)/k = sum_{d | j} d * psi_{j/d}(f_d).
    std::vector<MotiveRatio> weighted(order + 1);
    for (unsigned j = 1; j <= order; ++j)
        for (unsigned d = 1; d <= j; ++d)
            if (j % d == 0 && !f[d].is_zero()) weighted[j] += MotiveRatio(d) * adams(f[d], j / d);

    Series g = Series::constant(1, order);
    for (unsigned n = 1; n <= order; ++n) {
        MotiveRatio acc;
        for (unsigned j = 1; j <= n; ++j)
            if (!weighted[j].is_zero() && !g[n - j].is_zero()) acc += weighted[j] * g[n - j];
        g.set(n, divide_by_integer(acc, n, ErrorCode::non_integral_exp));
    }
    return g;
}

Series pleth_log(const Series& g, unsigned order) {
    require_plethystic_input(g, order, "Log");
    if (!(g[0] == MotiveRatio(1))) throw Error(ErrorCode::invalid_argument, "Log needs constant term 1");

    // logderiv[n] = n * [t^n] log g, from n g_n = sum_j logderiv[j] g_{n-j}.
    std::vector<MotiveRatio> logderiv(order + 1);
    for (unsigned n = 1; n <= order; ++n) {
        MotiveRatio acc = MotiveRatio(n) * g[n];
        for (unsigned j = 1; j < n; ++j)
            if (!logderiv[j].is_zero() && !g[n - j].is_zero()) acc -= logderiv[j] * g[n - j];
        logderiv[n] = acc;
    }

    Series f(order, 0);
    for (unsigned j = 1; j <= order; ++j) {
        MotiveRatio acc;
        for (unsigned k = 1; k <= j; ++k) {
            if (j % k != 0) continue;
            const int mu = moebius(k);
            if (mu == 0 || logderiv[j / k].is_zero()) continue;
            acc += MotiveRatio(mu) * adams(logderiv[j / k], k);
        }
        f.set(j, divide_by_integer(acc, j, ErrorCode::non_integral_exp));
    }
    return f;
}

Series exp_product_form(const Series& f, unsigned order, std::int64_t lmin) {
    if (f.twist() != 0) throw Error(ErrorCode::twist_mismatch, "Exp needs an untwisted series");
    if (f.order() < order) throw Error(ErrorCode::invalid_argument, "series is not known to the requested order");
    if (!f[0].is_zero()) throw Error(ErrorCode::invalid_argument, "Exp needs a series without constant term");

    // Every monomial reaching t^order is a product of at most `order` factors
    // of L-degree <= top, so working `order * top` half-steps lower keeps the
    // result exact down to lmin.
    std::int64_t top = 0;
    for (unsigned n = 1; n <= order; ++n) {
        const MotiveRatio& c = f[n];
        if (c.is_zero()) continue;
        if (!c.is_tag_free()) throw Error(ErrorCode::unsupported_coefficient, "product form needs M~-free coefficients");
        top = std::max(top, c.numerator().max_e2() - c.denominator().max_e2());
    }
    const std::int64_t target_e2 = 2 * lmin;
    const std::int64_t work_e2 = target_e2 - static_cast<std::int64_t>(order) * top;

    std::vector<MotiveClass> product(order + 1);
    product[0] = MotiveClass(1);
    for (unsigned n = 1; n <= order; ++n) {
        if (f[n].is_zero()) continue;
        const MotiveClass expansion = expand_in_inverse_lefschetz(f[n], work_e2);
        for (const auto& [key, c] : expansion.terms()) {
            // (1 - L^{e/2} t^n)^{-c} = sum_r binom(c + r - 1, r) L^{r e/2} t^{r n}
            std::vector<MotiveClass> factor(order + 1);
            mpz_class binom = 1;
            for (unsigned r = 0; r * n <= order; ++r) {
                if (r > 0) binom = binom * (c + (r - 1)) / r;
                factor[r * n] = MotiveClass::monomial(key.e2 * r, EquivTag::unit, binom);
            }
            std::vector<MotiveClass> next(order + 1);
            for (unsigned i = 0; i <= order; ++i) {
                if (product[i].is_zero()) continue;
                for (unsigned j = 0; i + j <= order; ++j)
                    if (!factor[j].is_zero()) next[i + j] += product[i] * factor[j];
            }
            for (auto& coeff : next) coeff = drop_below(coeff, work_e2);
            product = std::move(next);
        }
    }

    Series out(order, 0);
    for (unsigned i = 0; i <= order; ++i) out.set(i, MotiveRatio(drop_below(product[i], target_e2)));
    return out;
}

Series lefschetz_truncation(const Series& s, std::int64_t lmin) {
    Series out(s.order(), s.twist());
    for (unsigned i = 0; i <= s.order(); ++i) out.set(i, MotiveRatio(expand_in_inverse_lefschetz(s[i], 2 * lmin)));
    return out;
}

MotiveRatio from_conjecture_normalization(const MotiveRatio& m) {
    // 1 / (L^{1/2} - L^{-1/2}) = L^{1/2} / (L - 1)
    return -m * MotiveRatio(MotiveClass::lefschetz_half(1), MotiveClass::lefschetz(1) - MotiveClass(1));
}

MotiveRatio to_conjecture_normalization(const MotiveRatio& bracket) {
    return -bracket * MotiveRatio(MotiveClass::lefschetz_half(1) - MotiveClass::lefschetz_half(-1));
}

std::string to_string(const Series& s) {
    std::string out;
    for (unsigned i = 0; i <= s.order(); ++i) {
        if (s[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = to_string(s[i]);
        if (i == 0) {
            out += c;
            continue;
        }
        const bool simple = s[i].denominator() == MotiveClass(1) && s[i].numerator().size() == 1;
        if (c == "1")
            c.clear();
        else
            c = (simple ? c : "(" + c + ")") + "*";
        out += c + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
    }
    out += (out.empty() ? "O(t^" : " + O(t^") + std::to_string(s.order() + 1) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << to_string(s); }

} // namespace mdt
