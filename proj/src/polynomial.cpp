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

#include <mdt/polynomial.hpp>

#include <algorithm>
#include <numeric>

#include <mdt/error.hpp>

namespace mdt {

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const mpq_class& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
    Polynomial p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e[p.require_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::optional<std::size_t> Polynomial::index_of(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Polynomial::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorCode::invalid_argument, "unknown variable '" + std::string(name) + "'");
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](unsigned e) { return e == 0; }));
}

mpq_class Polynomial::constant_term() const {
    const auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Polynomial::degree_in(std::string_view name) const {
    const std::size_t i = require_index(name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

std::vector<std::string> Polynomial::used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; }))
            out.push_back(vars_[i]);
    return out;
}

Polynomial Polynomial::substitute(std::string_view name, const Polynomial& value) const {
    require_compatible(value);
    const std::size_t i = require_index(name);
    std::vector<Polynomial> powers{constant(vars_, 1)};
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[i] = 0;
        Polynomial mono(vars_);
        mono.add_term(rest, c);
        out += mono * powers[e[i]];
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, mpq_class>& values) const {
    Polynomial out = *this;
    for (const auto& [name, v] : values) out = out.substitute(name, constant(vars_, v));
    return out;
}

Polynomial Polynomial::coefficient_of(std::string_view name, unsigned power) const {
    const std::size_t i = require_index(name);
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != power) continue;
        Exponents rest = e;
        rest[i] = 0;
        out.add_term(rest, c);
    }
    return out;
}

std::optional<unsigned> Polynomial::weighted_degree(const std::map<std::string, unsigned>& weights) const {
    std::optional<unsigned> degree;
    for (const auto& [e, c] : terms_) {
        unsigned w = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto it = weights.find(vars_[i]);
            if (it != weights.end()) w += it->second * e[i];
        }
        if (degree && *degree != w) return std::nullopt;
        degree = w;
    }
    return degree.value_or(0);
}

mpq_class Polynomial::evaluate(const std::map<std::string, mpq_class>& values) const {
    std::vector<mpq_class> point(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = values.find(vars_[i]);
        if (it != values.end()) point[i] = it->second;
    }
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class v = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c) {
    if (e.size() != vars_.size()) throw Error(ErrorCode::invalid_argument, "exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_compatible(const Polynomial& other) const {
    if (vars_ != other.vars_) throw Error(ErrorCode::invalid_argument, "polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    require_compatible(other);
    Polynomial out(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial out = constant(vars_, 1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

std::string to_string(const Polynomial& p) {
    using Term = std::pair<Polynomial::Exponents, mpq_class>;
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    auto degree = [](const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        const unsigned da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    if (terms.empty()) return "0";

    std::string out;
    for (const auto& [e, c] : terms) {
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += p.variables()[i];
            if (e[i] > 1) factors += '^' + std::to_string(e[i]);
        }
        const bool negative = c < 0;
        const mpq_class magnitude = abs(c);
        std::string body;
        if (factors.empty())
            body = magnitude.get_str();
        else if (magnitude == 1)
            body = factors;
        else
            body = magnitude.get_str() + "*" + factors;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

} // namespace mdt
