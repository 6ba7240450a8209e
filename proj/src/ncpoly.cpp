// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/ncpoly.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace nclab::ncpoly {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("Polynomial: num_vars must be >= 1");
}

void Polynomial::add_term(Word word, Complex coeff) {
    for (const Letter& l : word) {
        if (l.var < 1 || l.var > num_vars_)
            throw std::invalid_argument("Polynomial: letter index out of range");
    }
    if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag()))
        throw std::invalid_argument("Polynomial: coefficient must be finite");
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        if (coeff != Complex{0.0, 0.0}) terms_.emplace(std::move(word), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

int Polynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [word, coeff] : terms_) d = std::max(d, word.size());
    return static_cast<int>(d);
}

double Polynomial::max_coeff_modulus() const {
    double m = 0.0;
    for (const auto& [word, coeff] : terms_) m = std::max(m, std::abs(coeff));
    return m;
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

class Parser {
  public:
    Parser(std::string_view text, int num_vars) : text_(text), poly_(num_vars) {}

    Polynomial run() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty input");
        bool negate = false;
        parse_term(negate);
        skip_ws();
        while (!at_end()) {
            const char c = peek();
            if (c == '+')
                negate = false;
            else if (c == '-')
                negate = true;
            else
                throw ParseError(pos_, "expected '+' or '-' between terms");
            ++pos_;
            parse_term(negate);
            skip_ws();
        }
        return std::move(poly_);
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            ++pos_;
    }

    bool starts_coeff(char c) const {
        return (c >= '0' && c <= '9') || c == '.' || c == '(' || c == '+' || c == '-';
    }

    void parse_term(bool negate) {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "expected term");
        Complex coeff{1.0, 0.0};
        bool have_coeff = false;
        if (starts_coeff(peek())) {
            coeff = parse_coeff();
            have_coeff = true;
        }
        Word word;
        skip_ws();
        if (have_coeff) {
            if (!at_end() && peek() == '*') {
                ++pos_;
                parse_factors(word);
            }
            // else: bare constant term (empty word)
        } else {
            parse_factors(word);
        }
        poly_.add_term(std::move(word), negate ? -coeff : coeff);
    }

    void parse_factors(Word& word) {
        parse_factor(word);
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            parse_factor(word);
            skip_ws();
        }
    }

    void parse_factor(Word& word) {
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError(pos_, "expected variable 'x<k>'");
        ++pos_;
        const int var = parse_posint("variable index");
        if (var > poly_.num_vars())
            throw ParseError(pos_, "variable index exceeds declared number of variables");
        Letter letter{var, false};
        if (!at_end() && peek() == '\'') {
            letter.starred = true;
            ++pos_;
        }
        int exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            exponent = parse_posint("exponent");
        }
        for (int i = 0; i < exponent; ++i) word.push_back(letter);
    }

    int parse_posint(const char* what) {
        if (at_end() || peek() < '0' || peek() > '9')
            throw ParseError(pos_, std::string("expected ") + what);
        long v = 0;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) throw ParseError(pos_, std::string(what) + " too large");
            ++pos_;
        }
        if (v < 1) throw ParseError(pos_, std::string(what) + " must be positive");
        return static_cast<int>(v);
    }

    Complex parse_coeff() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            const double re = parse_real(true);
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-'))
                throw ParseError(pos_, "expected '+' or '-' in complex literal");
            const double sign = (peek() == '-') ? -1.0 : 1.0;
            ++pos_;
            const double im = parse_real(false);
            skip_ws();
            if (at_end() || peek() != 'i') throw ParseError(pos_, "expected 'i' in complex literal");
            ++pos_;
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return {re, sign * im};
        }
        return {parse_real(true), 0.0};
    }

    double parse_real(bool allow_sign) {
        skip_ws();
        double sign = 1.0;
        if (allow_sign && !at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1.0;
            ++pos_;
        }
        if (at_end()) throw ParseError(pos_, "expected number");
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) throw ParseError(pos_, "expected number");
        if (!std::isfinite(value)) throw ParseError(pos_, "number is not finite");
        pos_ += static_cast<std::size_t>(ptr - first);
        return sign * value;
    }

    std::string_view text_;
    Polynomial poly_;
    std::size_t pos_ = 0;
};

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_word(const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size();) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(word[i].var);
        if (word[i].starred) out += '\'';
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

}  // namespace

Polynomial parse(std::string_view text, int num_vars) {
    return Parser(text, num_vars).run();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [word, coeff] : p.terms()) {
        const bool real_coeff = coeff.imag() == 0.0;
        const bool first = out.empty();
        Complex c = coeff;
        if (real_coeff) {
            if (!first) {
                out += (c.real() < 0.0) ? " - " : " + ";
                c = {std::abs(c.real()), 0.0};
            }
        } else if (!first) {
            out += " + ";
        }
        std::string coeff_text;
        if (real_coeff) {
            if (c.real() != 1.0 || word.empty()) coeff_text = format_real(c.real());
        } else {
            coeff_text = "(" + format_real(c.real()) + (c.imag() < 0.0 ? "-" : "+") +
                         format_real(std::abs(c.imag())) + "i)";
        }
        if (word.empty()) {
            out += coeff_text;
        } else if (coeff_text.empty()) {
            out += format_word(word);
        } else {
            out += coeff_text + "*" + format_word(word);
        }
    }
    return out;
}

Polynomial adjoint(const Polynomial& p) {
    Polynomial out(p.num_vars());
    for (const auto& [word, coeff] : p.terms()) {
        Word rev(word.rbegin(), word.rend());
        for (Letter& l : rev) l.starred = !l.starred;
        out.add_term(std::move(rev), std::conj(coeff));
    }
    return out;
}

Polynomial normalize_coefficients(const Polynomial& p) {
    const double m = p.max_coeff_modulus();
    if (m <= 1.0) return p;
    Polynomial out(p.num_vars());
    for (const auto& [word, coeff] : p.terms()) out.add_term(word, coeff / m);
    return out;
}

namespace {

// Letter matrices with lazily materialized adjoints.
class LetterTable {
  public:
    LetterTable(std::span<const Matrix> xs) : xs_(xs), adj_(xs.size()) {}

    const Matrix& get(const Letter& l) {
        const std::size_t k = static_cast<std::size_t>(l.var - 1);
        if (!l.starred) return xs_[k];
        if (!adj_[k].has_value()) adj_[k] = xs_[k].adjoint();
        return *adj_[k];
    }

  private:
    std::span<const Matrix> xs_;
    std::vector<std::optional<Matrix>> adj_;
};

std::size_t check_eval_inputs(const Polynomial& p, std::span<const Matrix> xs) {
    if (xs.size() != static_cast<std::size_t>(p.num_vars()))
        throw std::invalid_argument("evaluate: tuple length must equal num_vars");
    const std::size_t n = xs.empty() ? 0 : xs[0].rows();
    for (const Matrix& x : xs)
        if (!x.is_square() || x.rows() != n)
            throw std::invalid_argument("evaluate: matrices must be square and of equal size");
    return n;
}

}  // namespace

Matrix evaluate(const Polynomial& p, std::span<const Matrix> xs) {
    const std::size_t n = check_eval_inputs(p, xs);
    LetterTable table(xs);
    Matrix acc(n, n);
    for (const auto& [word, coeff] : p.terms()) {
        if (word.empty()) {
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeff;
            continue;
        }
        Matrix prod = table.get(word[0]);
        for (std::size_t i = 1; i < word.size(); ++i) prod = prod * table.get(word[i]);
        prod *= coeff;
        acc += prod;
    }
    return acc;
}

Complex evaluate_trace(const Polynomial& p, std::span<const Matrix> xs) {
    const std::size_t n = check_eval_inputs(p, xs);
    LetterTable table(xs);
    Complex z = 0.0;
    for (const auto& [word, coeff] : p.terms()) {
        if (word.empty()) {
            z += coeff * static_cast<double>(n);
            continue;
        }
        if (word.size() == 1) {
            z += coeff * table.get(word[0]).trace();
            continue;
        }
        // Multiply all but the last letter, then close the trace in O(n^2).
        const Matrix* prefix = &table.get(word[0]);
        Matrix scratch;
        for (std::size_t i = 1; i + 1 < word.size(); ++i) {
            scratch = *prefix * table.get(word[i]);
            prefix = &scratch;
        }
        const Letter& last = word.back();
        const Matrix& x = xs[static_cast<std::size_t>(last.var - 1)];
        z += coeff * (last.starred ? matkernel::trace_product_adjoint(*prefix, x)
                                   : matkernel::trace_product(*prefix, x));
    }
    return z;
}

}  // namespace nclab::ncpoly
