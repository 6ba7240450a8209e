// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex matrix kernel: products, traces, adjoints, Hermitian
// eigenvalues and Schatten p-norms. Everything else in the project builds on
// the value types defined here.

#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace nclab::matkernel {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Entries are plain doubles; all operations
// are pure and the type has full value semantics.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Complex* row(std::size_t i) { return a_.data() + i * cols_; }
    const Complex* row(std::size_t i) const { return a_.data() + i * cols_; }

    const std::vector<Complex>& entries() const { return a_; }

    Matrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;  // entrywise max modulus
    bool all_finite() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scalar);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex scalar, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

// tr(a b) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);
// tr(a b*) without forming the adjoint.
Complex trace_product_adjoint(const Matrix& a, const Matrix& b);

// d-fold product trace, tr A^d.
Complex power_trace(const Matrix& a, int d);

// Square matrix with ||A - A*||_2 <= 1e-12 max(1, ||A||_2), checked at
// construction. Converts implicitly to its underlying Matrix.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(Matrix m);

    const Matrix& get() const { return m_; }
    operator const Matrix&() const { return m_; }
    std::size_t size() const { return m_.rows(); }

  private:
    Matrix m_;
};

struct SpectralTolerance {
    double eps = 1e-12;   // off-diagonal Frobenius mass target, relative to ||A||_2
    int max_sweeps = 64;

    SpectralTolerance() = default;
    SpectralTolerance(double e, int sweeps);
};

// All eigenvalues of a Hermitian matrix, nonincreasing. Cyclic two-sided
// Jacobi; throws std::runtime_error if the off-diagonal mass has not dropped
// below eps * ||A||_2 within max_sweeps sweeps.
std::vector<double> herm_eigvals(const HermitianMatrix& a, SpectralTolerance tol = {});

// Sentinel for the operator norm in schatten_norm's exponent parameter.
inline constexpr double kSchattenInf = std::numeric_limits<double>::infinity();

// Schatten p-norm, the l_p norm of the singular values; p = kSchattenInf
// gives the operator norm. Requires p >= 1.
double schatten_norm(const Matrix& a, double p);

// Largest singular value via power iteration on A*A (what schatten_norm
// dispatches to for p = inf); deterministic.
double operator_norm(const Matrix& a);

}  // namespace nclab::matkernel
