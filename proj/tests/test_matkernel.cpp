// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nclab/matkernel.hpp"
#include "oracles.hpp"

using namespace nclab;
using namespace nclab::matkernel;

TEST_CASE("eigenvalues of small closed-form matrices") {
    Matrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 3.0;
    auto e = herm_eigvals(HermitianMatrix(d));
    CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-14));

    Matrix s(2, 2);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    e = herm_eigvals(HermitianMatrix(s));
    CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues match the characteristic-polynomial bisection oracle") {
    CounterRng rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = testing::random_hermitian(5, rng);
        const auto jac = herm_eigvals(HermitianMatrix(a));
        const auto bis = testing::bisection_eigvals(a);
        REQUIRE(jac.size() == bis.size());
        for (std::size_t i = 0; i < jac.size(); ++i)
            CHECK(std::abs(jac[i] - bis[i]) < 1e-8);
    }
}

TEST_CASE("eigenvalue sums reproduce trace and Frobenius norm") {
    CounterRng rng(55);
    for (std::size_t n : {3u, 8u, 17u}) {
        const Matrix a = testing::random_hermitian(n, rng);
        const auto e = herm_eigvals(HermitianMatrix(a));
        REQUIRE(e.size() == n);
        for (std::size_t i = 1; i < n; ++i) CHECK(e[i - 1] >= e[i]);
        double sum = 0.0, sumsq = 0.0;
        for (double x : e) {
            sum += x;
            sumsq += x * x;
        }
        CHECK(std::abs(sum - a.trace().real()) <= n * 1e-10 * std::max(1.0, a.max_abs()));
        const double fro2 = a.frobenius_norm() * a.frobenius_norm();
        CHECK(std::abs(sumsq - fro2) <= 1e-9 * fro2);
    }
}

TEST_CASE("eigenvalue error paths") {
    Matrix rect(2, 3);
    CHECK_THROWS_AS(HermitianMatrix{rect}, std::invalid_argument);

    Matrix skew(2, 2);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    CHECK_THROWS_AS(HermitianMatrix{skew}, std::invalid_argument);

    CHECK_THROWS_AS(SpectralTolerance(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(SpectralTolerance(1e-12, 0), std::invalid_argument);

    CounterRng rng(7);
    const Matrix a = testing::random_hermitian(8, rng);
    CHECK_THROWS_AS(herm_eigvals(HermitianMatrix(a), SpectralTolerance(1e-30, 1)),
                    std::runtime_error);
}

TEST_CASE("schatten norms on closed forms") {
    const Matrix id = Matrix::identity(5);
    for (double p : {1.0, 2.0, 3.0, 7.5})
        CHECK(schatten_norm(id, p) == doctest::Approx(std::pow(5.0, 1.0 / p)).epsilon(1e-12));
    CHECK(schatten_norm(id, kSchattenInf) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix nil(2, 2);
    nil(0, 1) = 2.0;
    for (double p : {1.0, 2.0, 4.0, kSchattenInf})
        CHECK(schatten_norm(nil, p) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(schatten_norm(id, 0.5), std::invalid_argument);
}

TEST_CASE("schatten 2-norm agrees with the entrywise Euclidean norm") {
    CounterRng rng(21);
    for (int rep = 0; rep < 5; ++rep) {
        const Matrix a = testing::random_matrix(6, rng);
        const double spectral = schatten_norm(a, 2.0);
        const double entrywise = a.frobenius_norm();
        CHECK(std::abs(spectral - entrywise) <= 1e-10 * entrywise);
    }
}

TEST_CASE("schatten monotonicity and Hoelder interpolation") {
    CounterRng rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix a = testing::random_matrix(4, rng);
        const double p_grid[] = {1.0, 1.5, 2.0, 3.0, 4.0, 8.0, kSchattenInf};
        double prev = 1e300;
        for (double p : p_grid) {
            const double v = schatten_norm(a, p);
            CHECK(v <= prev + 1e-10);
            prev = v;
        }
        const double n2 = schatten_norm(a, 2.0);
        const double ninf = schatten_norm(a, kSchattenInf);
        CHECK(schatten_norm(a, 4.0) <= std::sqrt(n2) * std::sqrt(ninf) * (1.0 + 1e-10));
    }
}

TEST_CASE("power traces") {
    CHECK(power_trace(Matrix::identity(7), 5).real() == doctest::Approx(7.0));

    Matrix nil(2, 2);
    nil(0, 1) = 1.0;
    CHECK(std::abs(power_trace(nil, 2)) == 0.0);

    CounterRng rng(77);
    const Matrix a = testing::random_hermitian(6, rng);
    const auto e = herm_eigvals(HermitianMatrix(a));
    double want = 0.0;
    for (double x : e) want += x * x * x;
    const Complex got = power_trace(a, 3);
    CHECK(std::abs(got - Complex{want, 0.0}) <= 1e-8 * std::max(1.0, std::abs(want)));

    CHECK_THROWS_AS(power_trace(Matrix(2, 3), 2), std::invalid_argument);
    CHECK_THROWS_AS(power_trace(a, 0), std::invalid_argument);
}

TEST_CASE("trace is cyclic on explicit products") {
    CounterRng rng(13);
    const Matrix a = testing::random_matrix(5, rng);
    const Matrix b = testing::random_matrix(5, rng);
    const Matrix c = testing::random_matrix(5, rng);
    const Complex abc = (a * b * c).trace();
    CHECK(std::abs(abc - (b * c * a).trace()) <= 1e-10 * std::abs(abc));
    CHECK(std::abs(abc - (c * a * b).trace()) <= 1e-10 * std::abs(abc));
    CHECK(std::abs(trace_product(a * b, c) - abc) <= 1e-10 * std::abs(abc));
}

TEST_CASE("sorted spectra are 1-Lipschitz in the Hilbert-Schmidt norm") {
    CounterRng rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = testing::random_hermitian(6, rng);
        const Matrix b = testing::random_hermitian(6, rng);
        const auto ea = herm_eigvals(HermitianMatrix(a));
        const auto eb = herm_eigvals(HermitianMatrix(b));
        double dist2 = 0.0;
        for (std::size_t i = 0; i < ea.size(); ++i) dist2 += (ea[i] - eb[i]) * (ea[i] - eb[i]);
        CHECK(std::sqrt(dist2) <= (a - b).frobenius_norm() * (1.0 + 1e-12));
    }
}

TEST_CASE("trace_product variants agree with explicit products") {
    CounterRng rng(3);
    const Matrix a = testing::random_matrix(4, rng);
    const Matrix b = testing::random_matrix(4, rng);
    CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < 1e-12);
    CHECK(std::abs(trace_product_adjoint(a, b) - (a * b.adjoint()).trace()) < 1e-12);
}
