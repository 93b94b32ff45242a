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

#include <mdt/expression.hpp>

#include <cctype>
#include <optional>

namespace mdt {

namespace {

struct Token {
    enum class Kind { number, identifier, op, end } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s, bool single_letter_identifiers) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::number, std::string(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            if (single_letter_identifiers) {
                ++i;
            } else {
                while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            }
            out.push_back({Token::Kind::identifier, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            ++i;
            out.push_back({Token::Kind::op, std::string(1, c), start});
        } else {
            throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

/// Exponent p/d with d in {1, 2}.
struct Exponent {
    long num;
    long den;
};

template <class Algebra>
class Parser {
public:
    using Value = typename Algebra::Value;

    Parser(const Algebra& algebra, std::string_view text)
        : algebra_(algebra), tokens_(tokenize(text, Algebra::single_letter_identifiers)) {}

    Value parse() {
        Value v = expression();
        if (peek().kind != Token::Kind::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& next() { return tokens_[index_++]; }
    bool accept_op(char op) {
        if (peek().kind == Token::Kind::op && peek().text[0] == op) {
            ++index_;
            return true;
        }
        return false;
    }
    void expect_op(char op) {
        if (!accept_op(op)) throw ParseError(peek().pos, std::string("expected '") + op + "'");
    }
    bool starts_factor() const {
        const Token& t = peek();
        return t.kind == Token::Kind::number || t.kind == Token::Kind::identifier ||
               (t.kind == Token::Kind::op && t.text[0] == '(');
    }

    Value expression() {
        Value acc = term();
        for (;;) {
            if (accept_op('+'))
                acc = algebra_.add(acc, term());
            else if (accept_op('-'))
                acc = algebra_.sub(acc, term());
            else
                return acc;
        }
    }

    Value term() {
        Value acc = signed_factor();
        for (;;) {
            if (accept_op('*')) {
                acc = algebra_.mul(acc, signed_factor());
            } else if (peek().kind == Token::Kind::op && peek().text[0] == '/') {
                const std::size_t pos = next().pos;
                acc = algebra_.div(acc, signed_factor(), pos);
            } else if (starts_factor()) {
                acc = algebra_.mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    Value signed_factor() {
        if (accept_op('-')) return algebra_.neg(signed_factor());
        if (accept_op('+')) return signed_factor();
        return power();
    }

    Value power() {
        Value base = primary();
        if (peek().kind == Token::Kind::op && peek().text[0] == '^') {
            const std::size_t pos = next().pos;
            return algebra_.pow(base, exponent(), pos);
        }
        return base;
    }

    Exponent exponent() {
        const bool parenthesized = accept_op('(');
        long sign = 1;
        if (accept_op('-'))
            sign = -1;
        else
            accept_op('+');
        Exponent e{sign * integer(), 1};
        if (parenthesized) {
            if (accept_op('/')) {
                const std::size_t pos = peek().pos;
                e.den = integer();
                if (e.den != 1 && e.den != 2) throw ParseError(pos, "only integer and half-integer exponents");
            }
            expect_op(')');
        }
        return e;
    }

    long integer() {
        const Token& t = next();
        if (t.kind != Token::Kind::number) throw ParseError(t.pos, "expected an integer exponent");
        if (t.text.size() > 6) throw ParseError(t.pos, "exponent too large");
        return std::stol(t.text);
    }

    Value primary() {
        const Token& t = next();
        switch (t.kind) {
        case Token::Kind::number:
            return algebra_.integer(mpz_class(t.text));
        case Token::Kind::identifier:
            return algebra_.symbol(t.text, t.pos);
        case Token::Kind::op:
            if (t.text[0] == '(') {
                Value v = expression();
                expect_op(')');
                return v;
            }
            throw ParseError(t.pos, "unexpected '" + t.text + "'");
        case Token::Kind::end:
            break;
        }
        throw ParseError(t.pos, "unexpected end of input");
    }

    const Algebra& algebra_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

// Motive ratios are parsed as order-0 series so both share one algebra.
struct SeriesAlgebra {
    using Value = Series;
    static constexpr bool single_letter_identifiers = false;

    unsigned order;
    bool allow_t;

    Value integer(const mpz_class& n) const { return Series::constant(MotiveRatio(MotiveClass(n)), order); }

    Value symbol(const std::string& name, std::size_t pos) const {
        if (name == "L") return Series::constant(MotiveClass::lefschetz(1), order);
        if (name == "Mt") return Series::constant(MotiveClass::mtilde(), order);
        if (name == "Mt2") return Series::constant(MotiveClass::mtilde_squared(), order);
        if (name == "mu3") return Series::constant(MotiveClass::mu3(), order);
        if (name == "t" && allow_t) return Series::monomial(1, 1, order);
        throw ParseError(pos, "unknown symbol '" + name + "'");
    }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    Value div(const Value& a, const Value& b, std::size_t pos) const {
        if (b[0].is_zero()) throw ParseError(pos, "division by a series without constant term");
        return a * b.inverse();
    }

    Value pow(const Value& base, Exponent e, std::size_t pos) const {
        if (e.den == 2 || (e.num < 0 && !base[0].is_zero() && is_constant(base))) {
            if (auto lp = lefschetz_power(base)) {
                if ((*lp * e.num) % e.den != 0) throw ParseError(pos, "exponent leaves the half-integer lattice");
                return Series::constant(MotiveClass::lefschetz_half(*lp * e.num / e.den), order);
            }
        }
        if (e.den == 2) throw ParseError(pos, "half-integer exponents need a pure power of L");
        Value acc = Series::constant(1, order);
        const Value factor = e.num < 0 ? div(Series::constant(1, order), base, pos) : base;
        for (long i = 0; i < (e.num < 0 ? -e.num : e.num); ++i) acc = acc * factor;
        return acc;
    }

    static bool is_constant(const Value& v) {
        for (unsigned i = 1; i <= v.order(); ++i)
            if (!v[i].is_zero()) return false;
        return true;
    }

    // Doubled exponent e2 when v is exactly L^{e2/2}.
    static std::optional<std::int64_t> lefschetz_power(const Value& v) {
        if (!is_constant(v)) return std::nullopt;
        const auto c = as_class(v[0]);
        if (!c || c->size() != 1) return std::nullopt;
        const auto& [key, coeff] = *c->terms().begin();
        if (key.tag != EquivTag::unit || coeff != 1) return std::nullopt;
        return key.e2;
    }
};

struct PolynomialAlgebra {
    using Value = Polynomial;
    static constexpr bool single_letter_identifiers = true;

    const std::vector<std::string>& variables;

    Value integer(const mpz_class& n) const { return Polynomial::constant(variables, mpq_class(n)); }

    Value symbol(const std::string& name, std::size_t pos) const {
        for (const auto& v : variables)
            if (v == name) return Polynomial::variable(variables, name);
        throw ParseError(pos, "unknown variable '" + name + "'");
    }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    Value div(const Value& a, const Value& b, std::size_t pos) const {
        if (!b.is_constant() || b.is_zero()) throw ParseError(pos, "polynomials can only be divided by nonzero constants");
        return a * (mpq_class(1) / b.constant_term());
    }

    Value pow(const Value& base, Exponent e, std::size_t pos) const {
        if (e.den != 1 || e.num < 0) throw ParseError(pos, "polynomial exponents must be non-negative integers");
        return base.pow(static_cast<unsigned>(e.num));
    }
};

} // namespace

MotiveRatio parse_motive_ratio(std::string_view text) {
    const SeriesAlgebra algebra{0, false};
    return Parser<SeriesAlgebra>(algebra, text).parse()[0];
}

MotiveClass parse_motive(std::string_view text) {
    const MotiveRatio r = parse_motive_ratio(text);
    if (auto c = as_class(r)) return *c;
    throw ParseError(0, "expression is not a motive class: " + to_string(r));
}

Series parse_series(std::string_view text, unsigned order) {
    const SeriesAlgebra algebra{order, true};
    return Parser<SeriesAlgebra>(algebra, text).parse();
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    const PolynomialAlgebra algebra{variables};
    return Parser<PolynomialAlgebra>(algebra, text).parse();
}

} // namespace mdt
