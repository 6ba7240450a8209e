// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Noncommutative *-polynomials: words over starred letters with complex
// coefficients, a small LL(1) concrete syntax, and evaluation on matrix
// tuples.
//
// Grammar (whitespace insignificant):
//   poly   := term (('+' | '-') term)*
//   term   := coeff | [coeff '*'] factor ('*' factor)*
//   factor := var ["'"] ['^' posint]
//   var    := 'x' posint
//   coeff  := real | '(' real ('+'|'-') real 'i' ')'
// The apostrophe is the adjoint ("x2'" = x2*), "x1'^2" means (x1*)^2, and a
// bare coeff term is the constant monomial. Printing emits the same grammar.

#pragma once

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nclab/matkernel.hpp"

namespace nclab::ncpoly {

using matkernel::Complex;
using matkernel::Matrix;

struct Letter {
    int var = 1;  // 1-based variable index
    bool starred = false;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word of letters; the empty word is the unit monomial.
using Word = std::vector<Letter>;

// Graded order: by degree, then lexicographically.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class Polynomial {
  public:
    explicit Polynomial(int num_vars);

    // Adds coeff * word, combining like terms; terms with coefficient exactly 0
    // are never stored.
    void add_term(Word word, Complex coeff);

    const std::map<Word, Complex, WordLess>& terms() const { return terms_; }
    int num_vars() const { return num_vars_; }
    int degree() const;  // max word length over stored terms; 0 when constant or zero
    bool is_zero() const { return terms_.empty(); }
    double max_coeff_modulus() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

  private:
    std::map<Word, Complex, WordLess> terms_;
    int num_vars_;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what);
    std::size_t position;  // 0-based offset into the input text
};

Polynomial parse(std::string_view text, int num_vars);
std::string to_string(const Polynomial& p);

// Reverses every word, flips stars, conjugates coefficients.
Polynomial adjoint(const Polynomial& p);

// Divides all coefficients by the max modulus when that modulus exceeds 1.
Polynomial normalize_coefficients(const Polynomial& p);

// P(X_1, ..., X_m) for square matrices of equal size; the empty word
// contributes coeff * I.
Matrix evaluate(const Polynomial& p, std::span<const Matrix> xs);

// tr P(X_1, ..., X_m) without forming the final product.
Complex evaluate_trace(const Polynomial& p, std::span<const Matrix> xs);

}  // namespace nclab::ncpoly
