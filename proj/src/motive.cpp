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

#include <mdt/motive.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace mdt {

namespace {

EquivTag tag_product(EquivTag a, EquivTag b) {
    if (a == EquivTag::unit) return b;
    if (b == EquivTag::unit) return a;
    if (a == EquivTag::mtilde && b == EquivTag::mtilde) return EquivTag::mtilde2;
    throw Error(ErrorCode::unreduced_equivariant_power,
                "product of M~ generators beyond M~^2 has no reduced form");
}

// Dense polynomial in z = L^{1/2}: value = sum coeffs[i] * z^(low + i).
struct Dense {
    std::int64_t low = 0;
    std::vector<mpz_class> coeffs;
};

Dense to_dense(const MotiveClass& a, EquivTag tag) {
    Dense d;
    bool first = true;
    std::int64_t high = 0;
    for (const auto& [key, c] : a.terms()) {
        if (key.tag != tag) continue;
        if (first) {
            d.low = key.e2;
            first = false;
        }
        high = key.e2;
    }
    if (first) return d;
    d.coeffs.assign(static_cast<std::size_t>(high - d.low + 1), mpz_class(0));
    for (const auto& [key, c] : a.terms())
        if (key.tag == tag) d.coeffs[static_cast<std::size_t>(key.e2 - d.low)] = c;
    return d;
}

void append_dense(MotiveClass& out, const Dense& d, EquivTag tag) {
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        out.add_term({d.low + static_cast<std::int64_t>(i), tag}, d.coeffs[i]);
}

// Exact division of dense polynomials with nonzero constant terms.
bool divide_dense(const std::vector<mpz_class>& a, const std::vector<mpz_class>& d,
                  std::vector<mpz_class>& quotient) {
    const std::size_t na = a.size() - 1;
    const std::size_t nd = d.size() - 1;
    if (na < nd) return false;
    std::vector<mpz_class> rem = a;
    quotient.assign(na - nd + 1, mpz_class(0));
    const mpz_class& lead = d[nd];
    for (std::size_t i = na - nd + 1; i-- > 0;) {
        const mpz_class& top = rem[i + nd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class q = top / lead;
        for (std::size_t j = 0; j <= nd; ++j) rem[i + j] -= q * d[j];
        quotient[i] = std::move(q);
    }
    return std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; });
}

constexpr unsigned kMaxCyclotomic = 96;

// Phi_j(z) for 1 <= j <= kMaxCyclotomic, as tag-free classes in z = L^{1/2}.
const std::vector<MotiveClass>& cyclotomics() {
    static const std::vector<MotiveClass> table = [] {
        std::vector<MotiveClass> phi(kMaxCyclotomic + 1);
        for (unsigned n = 1; n <= kMaxCyclotomic; ++n) {
            MotiveClass p = MotiveClass::lefschetz_half(n) - MotiveClass(1);
            for (unsigned d = 1; d < n; ++d)
                if (n % d == 0) p = *try_divide_exact(p, phi[d]);
            phi[n] = std::move(p);
        }
        return phi;
    }();
    return table;
}

std::pair<MotiveClass, MotiveClass> reduce(MotiveClass num, MotiveClass den) {
    if (den.is_zero()) throw Error(ErrorCode::invalid_argument, "zero denominator");
    if (num.is_zero()) return {MotiveClass(), MotiveClass(1)};

    const std::int64_t shift = den.min_e2();
    if (shift != 0) {
        num = num.shifted(-shift);
        den = den.shifted(-shift);
    }

    mpz_class g;
    const mpz_class cn = num.content();
    const mpz_class cd = den.content();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g != 1) {
        num = *num.divided_by(g);
        den = *den.divided_by(g);
    }

    if (den.size() > 1 && den.is_tag_free()) {
        const auto& phi = cyclotomics();
        std::int64_t span = den.max_e2();
        for (unsigned j = 1; j <= kMaxCyclotomic && span > 0; ++j) {
            const std::int64_t degree = phi[j].max_e2();
            while (degree <= span) {
                auto dq = try_divide_exact(den, phi[j]);
                if (!dq) break;
                auto nq = try_divide_exact(num, phi[j]);
                if (!nq) break;
                den = std::move(*dq);
                num = std::move(*nq);
                span -= degree;
            }
        }
    }

    if (den.terms().rbegin()->second < 0) {
        num = -num;
        den = -den;
    }
    return {std::move(num), std::move(den)};
}

std::string monomial_text(std::int64_t e2, EquivTag tag) {
    std::string out;
    if (tag == EquivTag::mtilde) out = "Mt";
    if (tag == EquivTag::mtilde2) out = "Mt2";
    if (e2 == 0) return out;
    if (!out.empty()) out += "*";
    if (e2 == 2) return out + "L";
    if (e2 % 2 != 0) return out + "L^(" + std::to_string(e2) + "/2)";
    if (e2 < 0) return out + "L^(" + std::to_string(e2 / 2) + ")";
    return out + "L^" + std::to_string(e2 / 2);
}

} // namespace

MotiveClass::MotiveClass(long constant) {
    if (constant != 0) terms_.emplace(MonomialKey{}, mpz_class(constant));
}

MotiveClass::MotiveClass(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(MonomialKey{}, constant);
}

MotiveClass MotiveClass::lefschetz(std::int64_t power) { return monomial(2 * power, EquivTag::unit); }

MotiveClass MotiveClass::lefschetz_half(std::int64_t e2) { return monomial(e2, EquivTag::unit); }

MotiveClass MotiveClass::monomial(std::int64_t e2, EquivTag tag, const mpz_class& coeff) {
    MotiveClass m;
    m.add_term({e2, tag}, coeff);
    return m;
}

MotiveClass MotiveClass::mtilde() { return monomial(0, EquivTag::mtilde); }

MotiveClass MotiveClass::mtilde_squared() { return monomial(0, EquivTag::mtilde2); }

MotiveClass MotiveClass::mu3() { return MotiveClass(1) - mtilde(); }

bool MotiveClass::is_tag_free() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.tag == EquivTag::unit; });
}

bool MotiveClass::has_tag(EquivTag tag) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [tag](const auto& t) { return t.first.tag == tag; });
}

bool MotiveClass::has_half_powers() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.e2 % 2 != 0; });
}

std::int64_t MotiveClass::min_e2() const {
    if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "min_e2 of zero class");
    std::int64_t m = terms_.begin()->first.e2;
    for (const auto& [key, c] : terms_) m = std::min(m, key.e2);
    return m;
}

std::int64_t MotiveClass::max_e2() const {
    if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "max_e2 of zero class");
    return terms_.rbegin()->first.e2;
}

MotiveClass MotiveClass::component(EquivTag tag) const {
    MotiveClass out;
    for (const auto& [key, c] : terms_)
        if (key.tag == tag) out.terms_.emplace(MonomialKey{key.e2, EquivTag::unit}, c);
    return out;
}

mpz_class MotiveClass::coefficient(std::int64_t e2, EquivTag tag) const {
    auto it = terms_.find({e2, tag});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

MotiveClass MotiveClass::shifted(std::int64_t e2) const {
    MotiveClass out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(MonomialKey{key.e2 + e2, key.tag}, c);
    return out;
}

MotiveClass MotiveClass::retagged(EquivTag tag) const {
    MotiveClass out;
    for (const auto& [key, c] : terms_) out.add_term({key.e2, tag_product(key.tag, tag)}, c);
    return out;
}

mpz_class MotiveClass::content() const {
    mpz_class g = 0;
    for (const auto& [key, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::optional<MotiveClass> MotiveClass::divided_by(const mpz_class& k) const {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "division by zero integer");
    MotiveClass out;
    for (const auto& [key, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
        out.terms_.emplace(key, c / k);
    }
    return out;
}

MotiveClass MotiveClass::pow(unsigned exponent) const {
    MotiveClass result(1);
    MotiveClass base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

void MotiveClass::add_term(const MonomialKey& key, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MotiveClass& MotiveClass::operator+=(const MotiveClass& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

MotiveClass& MotiveClass::operator-=(const MotiveClass& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

MotiveClass& MotiveClass::operator*=(const MotiveClass& other) {
    *this = *this * other;
    return *this;
}

MotiveClass operator*(const MotiveClass& a, const MotiveClass& b) {
    MotiveClass out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.e2 + kb.e2, tag_product(ka.tag, kb.tag)}, ca * cb);
    return out;
}

MotiveClass operator-(const MotiveClass& a) {
    MotiveClass out;
    for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, -c);
    return out;
}

MotiveClass gl_motive(unsigned n) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "gl_motive needs n >= 1");
    MotiveClass out(1);
    const auto ln = MotiveClass::lefschetz(n);
    for (unsigned k = 0; k < n; ++k) out *= ln - MotiveClass::lefschetz(k);
    return out;
}

std::optional<MotiveClass> try_divide_exact(const MotiveClass& a, const MotiveClass& d) {
    if (d.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero class");
    if (!d.is_tag_free()) throw Error(ErrorCode::invalid_argument, "divisor must be free of M~ tags");
    if (a.is_zero()) return MotiveClass();
    const Dense dd = to_dense(d, EquivTag::unit);
    MotiveClass out;
    for (EquivTag tag : {EquivTag::unit, EquivTag::mtilde, EquivTag::mtilde2}) {
        Dense da = to_dense(a, tag);
        if (da.coeffs.empty()) continue;
        Dense q;
        if (!divide_dense(da.coeffs, dd.coeffs, q.coeffs)) return std::nullopt;
        q.low = da.low - dd.low;
        append_dense(out, q, tag);
    }
    return out;
}

MotiveClass divide_exact(const MotiveClass& a, const MotiveClass& d, const std::string& context) {
    auto q = try_divide_exact(a, d);
    if (!q) {
        std::string msg = "(" + to_string(a) + ") is not divisible by (" + to_string(d) + ")";
        if (!context.empty()) msg = context + ": " + msg;
        throw Error(ErrorCode::non_exact_division, msg);
    }
    return std::move(*q);
}

MotiveClass adams(const MotiveClass& a, unsigned k) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "Adams operation needs k >= 1");
    if (k == 1) return a;
    MotiveClass out;
    for (const auto& [key, c] : a.terms()) {
        const std::int64_t e2 = key.e2 * static_cast<std::int64_t>(k);
        switch (key.tag) {
        case EquivTag::unit:
            out.add_term({e2, EquivTag::unit}, c);
            break;
        case EquivTag::mtilde:
            if (k != 2) throw Error(ErrorCode::unsupported_adams, "psi_" + std::to_string(k) + "(M~) is not defined");
            out.add_term({e2 + 2, EquivTag::unit}, 2 * c);
            out.add_term({e2, EquivTag::mtilde2}, -c);
            break;
        case EquivTag::mtilde2:
            throw Error(ErrorCode::unsupported_adams, "psi_" + std::to_string(k) + "(M~^2) is not defined");
        }
    }
    return out;
}

mpz_class evaluate(const MotiveClass& a, std::uint64_t q, int mu3_count) {
    if (mu3_count != 0 && mu3_count != 1 && mu3_count != 3)
        throw Error(ErrorCode::invalid_argument, "mu3_count must be 0, 1 or 3");
    const mpz_class mt = 1 - mu3_count;
    mpz_class total = 0;
    for (const auto& [key, c] : a.terms()) {
        if (key.e2 < 0 || key.e2 % 2 != 0)
            throw Error(ErrorCode::fractional_exponent,
                        "cannot evaluate " + monomial_text(key.e2, EquivTag::unit) + " at an integer");
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), q, static_cast<unsigned long>(key.e2 / 2));
        term *= c;
        if (key.tag == EquivTag::mtilde) term *= mt;
        if (key.tag == EquivTag::mtilde2) term *= mt * mt;
        total += term;
    }
    return total;
}

std::string to_string(const MotiveClass& a) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<MonomialKey, mpz_class>> terms(a.terms().begin(), a.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        if (x.first.e2 != y.first.e2) return x.first.e2 > y.first.e2;
        return x.first.tag < y.first.tag;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        const bool negative = c < 0;
        const mpz_class magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const std::string mono = monomial_text(key.e2, key.tag);
        if (mono.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.get_str() + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MotiveClass& a) { return os << to_string(a); }

MotiveRatio::MotiveRatio(MotiveClass numerator) : num_(std::move(numerator)), den_(1) {}

MotiveRatio::MotiveRatio(MotiveClass numerator, MotiveClass denominator) {
    auto [n, d] = reduce(std::move(numerator), std::move(denominator));
    num_ = std::move(n);
    den_ = std::move(d);
}

MotiveRatio::MotiveRatio(MotiveClass numerator, MotiveClass denominator, Unreduced)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

MotiveRatio& MotiveRatio::operator+=(const MotiveRatio& other) {
    if (den_ == other.den_)
        *this = MotiveRatio(num_ + other.num_, den_);
    else
        *this = MotiveRatio(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
    return *this;
}

MotiveRatio& MotiveRatio::operator-=(const MotiveRatio& other) { return *this += -other; }

MotiveRatio& MotiveRatio::operator*=(const MotiveRatio& other) {
    *this = MotiveRatio(num_ * other.num_, den_ * other.den_);
    return *this;
}

MotiveRatio& MotiveRatio::operator/=(const MotiveRatio& other) {
    if (other.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero ratio");
    *this = MotiveRatio(num_ * other.den_, den_ * other.num_);
    return *this;
}

MotiveRatio operator-(const MotiveRatio& a) { return {-a.num_, a.den_, MotiveRatio::Unreduced{}}; }

bool operator==(const MotiveRatio& a, const MotiveRatio& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

MotiveRatio adams(const MotiveRatio& a, unsigned k) {
    return {adams(a.numerator(), k), adams(a.denominator(), k)};
}

MotiveRatio sigma2(const MotiveRatio& a) {
    return divide_by_integer(a * a + adams(a, 2), 2, ErrorCode::non_integral_sigma);
}

MotiveRatio divide_by_integer(const MotiveRatio& a, const mpz_class& k, ErrorCode failure) {
    auto q = a.numerator().divided_by(k);
    if (!q) throw Error(failure, "numerator of " + to_string(a) + " is not divisible by " + k.get_str());
    return {std::move(*q), a.denominator()};
}

std::optional<MotiveClass> as_class(const MotiveRatio& a) {
    if (!a.denominator().is_tag_free()) return std::nullopt;
    return try_divide_exact(a.numerator(), a.denominator());
}

MotiveClass expand_in_inverse_lefschetz(const MotiveRatio& a, std::int64_t min_e2) {
    if (!a.is_tag_free())
        throw Error(ErrorCode::unsupported_coefficient, "L-adic expansion needs M~-free coefficients");
    MotiveClass quotient;
    if (a.is_zero()) return quotient;
    const MotiveClass& den = a.denominator();
    const std::int64_t top = den.max_e2();
    const mpz_class lead = den.coefficient(top);
    MotiveClass rem = a.numerator();
    while (!rem.is_zero() && rem.max_e2() - top >= min_e2) {
        const std::int64_t e2 = rem.max_e2() - top;
        const mpz_class c = rem.coefficient(rem.max_e2());
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw Error(ErrorCode::unsupported_coefficient,
                        "expansion of " + to_string(a) + " in L^-1 is not integral");
        const MotiveClass step = MotiveClass::monomial(e2, EquivTag::unit, c / lead);
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

std::string to_string(const MotiveRatio& a) {
    if (a.denominator() == MotiveClass(1)) return to_string(a.numerator());
    const std::string num = to_string(a.numerator());
    const std::string den = to_string(a.denominator());
    const bool bare_den = den.find_first_of("* -") == std::string::npos;
    return (a.numerator().size() > 1 ? "(" + num + ")" : num) + "/" + (bare_den ? den : "(" + den + ")");
}

std::ostream& operator<<(std::ostream& os, const MotiveRatio& a) { return os << to_string(a); }

} // namespace mdt
