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

#include <mdt/superpotential.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

#include <mdt/error.hpp>

namespace mdt {

mpq_class Superpotential::coefficient(const Word& word) const {
    const auto it = terms_.find(canonical_rotation(word));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::optional<unsigned> Superpotential::degree() const {
    std::optional<unsigned> d;
    for (const auto& [word, c] : terms_) {
        if (d && *d != word.size()) return std::nullopt;
        d = static_cast<unsigned>(word.size());
    }
    return d;
}

void Superpotential::add(Word word, const mpq_class& coeff) {
    if (word.empty()) throw Error(ErrorCode::invalid_argument, "empty word in superpotential");
    for (unsigned letter : word)
        if (letter >= m_) throw Error(ErrorCode::invalid_argument, "letter index out of range");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(canonical_rotation(word), coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Superpotential::Word canonical_rotation(const Superpotential::Word& word) {
    Superpotential::Word best = word;
    Superpotential::Word rotated = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        if (rotated < best) best = rotated;
    }
    return best;
}

namespace {

class PotentialParser {
public:
    explicit PotentialParser(std::string_view text) : s_(text) {}

    Superpotential parse() {
        indexed_ = detect_indexed();
        struct Term {
            Superpotential::Word word;
            mpq_class coeff;
        };
        std::vector<Term> terms;
        skip_space();
        if (at_end()) throw ParseError(0, "empty superpotential");
        bool first = true;
        while (!at_end()) {
            mpq_class sign = 1;
            if (s_[i_] == '+' || s_[i_] == '-') {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
                skip_space();
            } else if (!first) {
                throw ParseError(i_, "expected '+' or '-' between terms");
            }
            first = false;
            mpq_class coeff = sign;
            if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                coeff *= rational();
                skip_space();
                if (!at_end() && s_[i_] == '*') {
                    ++i_;
                    skip_space();
                }
            }
            terms.push_back({word(), coeff});
        }
        unsigned m = indexed_ ? 0 : 3;
        for (const auto& t : terms)
            for (unsigned letter : t.word) m = std::max(m, letter + 1);
        Superpotential w(m);
        for (const auto& t : terms) w.add(t.word, t.coeff);
        return w;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool detect_indexed() const {
        for (std::size_t k = 0; k + 1 < s_.size(); ++k)
            if (s_[k] == 'X' && std::isdigit(static_cast<unsigned char>(s_[k + 1]))) return true;
        return false;
    }

    unsigned long natural() {
        const std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError(i_, "expected a number");
        if (i_ - start > 9) throw ParseError(start, "number too large");
        return std::stoul(std::string(s_.substr(start, i_ - start)));
    }

    mpq_class rational() {
        const std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        mpq_class value(mpz_class(std::string(s_.substr(start, i_ - start))));
        skip_space();
        if (!at_end() && s_[i_] == '/') {
            ++i_;
            skip_space();
            const std::size_t dstart = i_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (dstart == i_) throw ParseError(i_, "expected a denominator");
            const mpz_class den(std::string(s_.substr(dstart, i_ - dstart)));
            if (den == 0) throw ParseError(dstart, "zero denominator");
            value /= mpq_class(den);
        }
        return value;
    }

    Superpotential::Word word() {
        Superpotential::Word w;
        for (;;) {
            skip_space();
            if (at_end() || s_[i_] == '+' || s_[i_] == '-') break;
            const unsigned letter = this->letter();
            unsigned repeat = 1;
            skip_space();
            if (!at_end() && s_[i_] == '^') {
                ++i_;
                skip_space();
                const std::size_t epos = i_;
                const unsigned long k = natural();
                if (k == 0 || k > 64) throw ParseError(epos, "letter exponent must be between 1 and 64");
                repeat = static_cast<unsigned>(k);
            }
            w.insert(w.end(), repeat, letter);
        }
        if (w.empty()) throw ParseError(i_, "expected a word in the letters");
        return w;
    }

    unsigned letter() {
        const std::size_t pos = i_;
        const char c = s_[i_];
        if (indexed_) {
            if (c != 'X') throw ParseError(pos, "expected an indexed letter X1, X2, ...");
            ++i_;
            const unsigned long k = natural();
            if (k == 0) throw ParseError(pos, "letters are numbered from X1");
            return static_cast<unsigned>(k - 1);
        }
        if (c == 'X' || c == 'Y' || c == 'Z') {
            ++i_;
            return static_cast<unsigned>(c - 'X');
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
    bool indexed_ = false;
};

std::string letter_name(unsigned m, unsigned letter) {
    if (m <= 3) return std::string(1, static_cast<char>('X' + letter));
    return "X" + std::to_string(letter + 1);
}

} // namespace

Superpotential parse_potential(std::string_view text) { return PotentialParser(text).parse(); }

std::string to_string(const Superpotential& w) {
    if (w.terms().empty()) return "0";
    // Mixed words first, then powers of a single letter; each group lexicographic.
    std::vector<std::pair<Superpotential::Word, mpq_class>> terms(w.terms().begin(), w.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const bool a_power = std::adjacent_find(a.first.begin(), a.first.end(), std::not_equal_to<>()) == a.first.end();
        const bool b_power = std::adjacent_find(b.first.begin(), b.first.end(), std::not_equal_to<>()) == b.first.end();
        if (a_power != b_power) return b_power;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [word, c] : terms) {
        std::string letters;
        for (unsigned l : word) letters += letter_name(w.letters(), l);
        const mpq_class magnitude = abs(c);
        const std::string body = magnitude == 1 ? letters : magnitude.get_str() + " " + letters;
        if (out.empty())
            out = c < 0 ? "-" + body : body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

std::vector<std::string> matrix_variables(unsigned m, unsigned n) {
    if (m == 3 && n == 2) return {"n", "p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"};
    if (m == 3 && n == 1) return {"x", "y", "z"};
    std::vector<std::string> vars;
    for (unsigned k = 1; k <= m; ++k)
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                vars.push_back("x" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j));
    return vars;
}

Polynomial trace_expand(const Superpotential& w, unsigned n) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
    const std::vector<std::string> vars = matrix_variables(w.letters(), n);
    Polynomial out(vars);
    auto entry = [n](unsigned letter, unsigned i, unsigned j) { return (letter * n + i) * n + j; };
    for (const auto& [word, c] : w.terms()) {
        const std::size_t d = word.size();
        std::vector<unsigned> idx(d, 0);
        for (;;) {
            Polynomial::Exponents e(vars.size(), 0);
            for (std::size_t k = 0; k < d; ++k) ++e[entry(word[k], idx[k], idx[(k + 1) % d])];
            out.add_term(e, c);
            std::size_t k = 0;
            while (k < d && ++idx[k] == n) idx[k++] = 0;
            if (k == d) break;
        }
    }
    return out;
}

Polynomial BlockDecomposition::reconstruct() const {
    Polynomial out = cubic;
    for (std::size_t a = 0; a < 3; ++a)
        out += bilinear[a] * Polynomial::variable(cubic.variables(), lower[a]);
    return out;
}

BlockDecomposition block_decompose(const Polynomial& trace) {
    const std::vector<std::string> vars = matrix_variables(3, 2);
    if (trace.variables() != vars)
        throw Error(ErrorCode::decomposition_failure, "expected a trace polynomial of three 2x2 matrices");
    auto position = [&](const char* name) { return trace.require_index(name); };

    BlockDecomposition out;
    out.cubic = Polynomial(vars);
    for (auto& row : out.linear) row.fill(Polynomial(vars));
    out.bilinear.fill(Polynomial(vars));

    for (const auto& [e, c] : trace.terms()) {
        unsigned diag = 0, low = 0, up = 0;
        std::size_t low_at = 0, up_at = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            if (e[position(BlockDecomposition::lower[k])] > 0) {
                low += e[position(BlockDecomposition::lower[k])];
                low_at = k;
            }
            if (e[position(BlockDecomposition::upper[k])] > 0) {
                up += e[position(BlockDecomposition::upper[k])];
                up_at = k;
            }
        }
        for (const char* d : BlockDecomposition::diagonal) diag += e[position(d)];

        if (diag == 3 && low == 0 && up == 0) {
            out.cubic.add_term(e, c);
        } else if (diag == 1 && low == 1 && up == 1) {
            Polynomial::Exponents rest = e;
            rest[position(BlockDecomposition::lower[low_at])] = 0;
            rest[position(BlockDecomposition::upper[up_at])] = 0;
            out.linear[low_at][up_at].add_term(rest, c);
        } else {
            Polynomial mono(vars);
            mono.add_term(e, c);
            throw Error(ErrorCode::decomposition_failure, "monomial " + to_string(mono) + " is not a closed path of length 3");
        }
    }
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            out.bilinear[a] += out.linear[a][b] * Polynomial::variable(vars, BlockDecomposition::upper[b]);
    return out;
}

std::map<std::string, unsigned> cell_weights() {
    std::map<std::string, unsigned> w;
    for (const char* v : BlockDecomposition::diagonal) w[v] = 1;
    for (const char* v : BlockDecomposition::upper) w[v] = 2;
    for (const char* v : BlockDecomposition::lower) w[v] = 0;
    return w;
}

std::array<StratumSpec, 3> cell_equations(const Superpotential& w, unsigned lambda) {
    if (w.letters() != 3 || w.degree() != 3u)
        throw Error(ErrorCode::invalid_argument, "cell equations need a cubic potential in three letters");
    if (lambda > 1) throw Error(ErrorCode::invalid_argument, "lambda tag must be 0 or 1");
    const Polynomial trace = trace_expand(w, 2);
    const std::array<std::map<std::string, int>, 3> fixed{{
        {{"n", 0}, {"q", 1}},
        {{"q", 0}, {"s", 0}, {"u", 1}},
        {{"q", 0}, {"u", 0}, {"w", 0}, {"y", 1}},
    }};
    std::array<StratumSpec, 3> cells;
    for (std::size_t i = 0; i < 3; ++i) {
        StratumSpec& cell = cells[i];
        cell.name = "S" + std::to_string(i + 1);
        cell.fixed = fixed[i];
        cell.weights = cell_weights();
        cell.rhs = lambda;
        std::map<std::string, mpq_class> values;
        for (const auto& [v, c] : fixed[i]) values[v] = c;
        cell.equation = trace.substitute(values);
        for (const auto& v : trace.variables())
            if (!fixed[i].count(v)) cell.variables.push_back(v);
    }
    return cells;
}

StratumSpec fiber_spec(const Superpotential& w, unsigned n, unsigned lambda) {
    StratumSpec spec;
    spec.name = "M" + std::to_string(n);
    spec.equation = trace_expand(w, n);
    spec.variables = spec.equation.variables();
    spec.rhs = lambda;
    if (w.letters() == 3 && n == 2)
        spec.weights = cell_weights();
    else
        for (const auto& v : spec.variables) spec.weights[v] = 1;
    return spec;
}

PotentialParams potential_params(const Superpotential& w) {
    if (w.letters() != 3) throw Error(ErrorCode::invalid_argument, "expected a potential in X, Y, Z");
    const Superpotential::Word xxx{0, 0, 0}, yyy{1, 1, 1}, zzz{2, 2, 2}, xyz{0, 1, 2}, xzy{0, 2, 1};
    for (const auto& [word, c] : w.terms())
        if (word != xxx && word != yyy && word != zzz && word != xyz && word != xzy)
            throw Error(ErrorCode::invalid_argument, "potential is not of the form aX^3 + bY^3 + cZ^3 + dXYZ + eXZY");
    return {w.coefficient(xxx), w.coefficient(yyy), w.coefficient(zzz), w.coefficient(xyz), w.coefficient(xzy)};
}

} // namespace mdt
