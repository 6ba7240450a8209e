// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nclab/ncpoly.hpp"
#include "oracles.hpp"

using namespace nclab;
using namespace nclab::ncpoly;
using matkernel::Complex;
using matkernel::Matrix;

namespace {

Word make_word(std::initializer_list<std::pair<int, bool>> letters) {
    Word w;
    for (auto [var, star] : letters) w.push_back(Letter{var, star});
    return w;
}

Polynomial random_poly(int m, CounterRng& rng) {
    Polynomial p(m);
    const int terms = 1 + static_cast<int>(rng.next_u64() % 5);
    for (int t = 0; t < terms; ++t) {
        Word w;
        const int len = static_cast<int>(rng.next_u64() % 5);
        for (int i = 0; i < len; ++i)
            w.push_back(Letter{1 + static_cast<int>(rng.next_u64() % m), rng.next_sign()});
        Complex c{rng.next_uniform(-2.0, 2.0), rng.next_uniform(-2.0, 2.0)};
        if (rng.next_sign()) c = {c.real(), 0.0};  // mix real and complex coefficients
        p.add_term(std::move(w), c);
    }
    return p;
}

}  // namespace

TEST_CASE("parsing the basic grammar") {
    const Polynomial p = parse("x1*x2' - 0.5*x3^2", 3);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.degree() == 2);
    CHECK(p.terms().at(make_word({{1, false}, {2, true}})) == Complex{1.0, 0.0});
    CHECK(p.terms().at(make_word({{3, false}, {3, false}})) == Complex{-0.5, 0.0});

    const Polynomial q = parse("(1+2i)*x1^3", 1);
    REQUIRE(q.terms().size() == 1);
    CHECK(q.degree() == 3);
    CHECK(q.terms().at(make_word({{1, false}, {1, false}, {1, false}})) == Complex{1.0, 2.0});

    const Polynomial r = parse("x1 + x1", 1);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms().at(make_word({{1, false}})) == Complex{2.0, 0.0});

    // the unit monomial is a bare coefficient
    const Polynomial c = parse("2.5", 1);
    REQUIRE(c.terms().size() == 1);
    CHECK(c.degree() == 0);
    CHECK(c.terms().at(Word{}) == Complex{2.5, 0.0});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("", 1), ParseError);
    CHECK_THROWS_AS(parse("   ", 1), ParseError);
    CHECK_THROWS_AS(parse("x1 +", 1), ParseError);
    CHECK_THROWS_AS(parse("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse("y1", 1), ParseError);
    CHECK_THROWS_AS(parse("x0", 1), ParseError);
    CHECK_THROWS_AS(parse("x1^0", 1), ParseError);
    CHECK_THROWS_AS(parse("(1+2)*x1", 1), ParseError);

    try {
        parse("x1 * & x2", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }

    // variable index beyond the declared count
    CHECK_THROWS_AS(parse("x3", 2), ParseError);
}

TEST_CASE("print/parse round trip") {
    CounterRng rng(2024);
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 1 + static_cast<int>(rng.next_u64() % 3);
        const Polynomial p = random_poly(m, rng);
        const std::string text = to_string(p);
        const Polynomial q = parse(text, m);
        CHECK(q == p);
    }
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(parse("0", 2) == Polynomial(2));
    CHECK(parse(to_string(parse("x1 - x1", 1)), 1) == Polynomial(1));
}

TEST_CASE("adjoint") {
    Polynomial p(2);
    p.add_term(make_word({{1, false}, {2, false}}), Complex{0.0, 1.0});
    const Polynomial pa = adjoint(p);
    REQUIRE(pa.terms().size() == 1);
    CHECK(pa.terms().at(make_word({{2, true}, {1, true}})) == Complex{0.0, -1.0});

    const Polynomial sa = parse("x1 + x1'", 1);
    CHECK(adjoint(sa) == sa);

    CHECK(adjoint(Polynomial(1)) == Polynomial(1));

    CounterRng rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        const Polynomial q = random_poly(2, rng);
        CHECK(adjoint(adjoint(q)) == q);
    }
}

TEST_CASE("evaluation on explicit matrices") {
    // p = x1 x1' at the nilpotent shift
    Matrix a(2, 2);
    a(0, 1) = 1.0;
    const Polynomial p = parse("x1*x1'", 1);
    const Matrix v = evaluate(p, std::vector<Matrix>{a});
    CHECK(v(0, 0) == Complex{1.0, 0.0});
    CHECK(v(0, 1) == Complex{0.0, 0.0});
    CHECK(v(1, 0) == Complex{0.0, 0.0});
    CHECK(v(1, 1) == Complex{0.0, 0.0});

    CounterRng rng(17);
    const Matrix r = testing::random_matrix(4, rng);
    CHECK(evaluate(parse("x1", 1), std::vector<Matrix>{r}) == r);

    // constant term evaluates to c I
    const Matrix c = evaluate(parse("3", 1), std::vector<Matrix>{r});
    CHECK(c(0, 0) == Complex{3.0, 0.0});
    CHECK(c(0, 1) == Complex{0.0, 0.0});

    CHECK_THROWS_AS(evaluate(p, std::vector<Matrix>{}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(p, std::vector<Matrix>{Matrix(2, 3)}), std::invalid_argument);
}

TEST_CASE("selfadjoint polynomials have real trace on Hermitian tuples") {
    CounterRng rng(23);
    const Polynomial p = parse("x1*x2 + x2'*x1' + 0.5*x1^2", 2);
    const Polynomial sym = parse("x1*x2 + x2'*x1'", 2);  // p + p* built by hand
    CHECK(adjoint(sym) == sym);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Matrix> xs{testing::random_hermitian(5, rng),
                               testing::random_hermitian(5, rng)};
        const Complex t = evaluate(sym, xs).trace();
        CHECK(std::abs(t.imag()) < 1e-10);
        (void)p;
    }
}

TEST_CASE("evaluate respects the star and is additive") {
    CounterRng rng(29);
    for (int rep = 0; rep < 20; ++rep) {
        const Polynomial p = random_poly(2, rng);
        std::vector<Matrix> xs{testing::random_matrix(4, rng), testing::random_matrix(4, rng)};
        const Matrix lhs = evaluate(adjoint(p), xs);
        const Matrix rhs = evaluate(p, xs).adjoint();
        CHECK((lhs - rhs).max_abs() < 1e-10);
    }

    // additivity and word concatenation on monomials
    Polynomial m1(2), m2(2), sum(2), prod(2);
    const Word w1 = make_word({{1, false}, {2, true}});
    const Word w2 = make_word({{2, false}});
    Word w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    m1.add_term(w1, Complex{0.5, 1.0});
    m2.add_term(w2, Complex{-2.0, 0.25});
    sum.add_term(w1, Complex{0.5, 1.0});
    sum.add_term(w2, Complex{-2.0, 0.25});
    prod.add_term(w12, Complex{0.5, 1.0} * Complex{-2.0, 0.25});

    CounterRng rng2(31);
    std::vector<Matrix> xs{testing::random_matrix(3, rng2), testing::random_matrix(3, rng2)};
    CHECK((evaluate(sum, xs) - (evaluate(m1, xs) + evaluate(m2, xs))).max_abs() < 1e-12);
    CHECK((evaluate(prod, xs) - evaluate(m1, xs) * evaluate(m2, xs)).max_abs() < 1e-12);
}

TEST_CASE("evaluate_trace matches the trace of evaluate") {
    CounterRng rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        const Polynomial p = random_poly(2, rng);
        std::vector<Matrix> xs{testing::random_matrix(5, rng), testing::random_matrix(5, rng)};
        const Complex lhs = evaluate_trace(p, xs);
        const Complex rhs = evaluate(p, xs).trace();
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("coefficient normalization") {
    Polynomial p(1);
    p.add_term(make_word({{1, false}}), Complex{2.0, 0.0});
    p.add_term(make_word({{1, false}, {1, false}}), Complex{0.0, -4.0});
    const Polynomial q = normalize_coefficients(p);
    CHECK(q.terms().at(make_word({{1, false}})) == Complex{0.5, 0.0});
    CHECK(q.terms().at(make_word({{1, false}, {1, false}})) == Complex{0.0, -1.0});
    CHECK(q.degree() == p.degree());

    const Polynomial small = parse("0.3*x1 - 0.7*x1^2", 1);
    CHECK(normalize_coefficients(small) == small);

    CHECK(normalize_coefficients(Polynomial(1)) == Polynomial(1));
}
