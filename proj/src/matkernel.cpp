// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nclab/rng.hpp"

namespace nclab::matkernel {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {
    require(rows > 0 && cols > 0, "Matrix: dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(rows > 0 && cols > 0, "Matrix: dimensions must be positive");
    require(a_.size() == rows * cols, "Matrix: entry count does not match shape");
    if (!all_finite()) throw std::invalid_argument("Matrix: entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Complex Matrix::trace() const {
    require(is_square(), "trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool Matrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "operator+=: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "operator-=: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
    for (Complex& z : a_) z *= scalar;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex scalar, Matrix a) { return a *= scalar; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "operator*: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k_dim = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        Complex* ci = c.row(i);
        const Complex* ai = a.row(i);
        for (std::size_t k = 0; k < k_dim; ++k) {
            const Complex aik = ai[k];
            if (aik == Complex{0.0, 0.0}) continue;
            const Complex* bk = b.row(k);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows() && a.rows() == b.cols(), "trace_product: shape mismatch");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex* ai = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) t += ai[k] * b(k, i);
    }
    return t;
}

Complex trace_product_adjoint(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "trace_product_adjoint: shape mismatch");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex* ai = a.row(i);
        const Complex* bi = b.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) t += ai[k] * std::conj(bi[k]);
    }
    return t;
}

Complex power_trace(const Matrix& a, int d) {
    require(a.is_square(), "power_trace: matrix must be square");
    require(d >= 1, "power_trace: exponent must be >= 1");
    if (d == 1) return a.trace();
    if (d == 2) return trace_product(a, a);
    Matrix prefix = a;
    for (int i = 2; i + 1 <= d; ++i) prefix = prefix * a;  // prefix = A^(d-1)
    return trace_product(prefix, a);
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
    require(m_.rows() > 0 && m_.is_square(), "HermitianMatrix: matrix must be square");
    double dev = 0.0;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j) dev += std::norm(m_(i, j) - std::conj(m_(j, i)));
    dev = std::sqrt(dev);
    const double scale = std::max(1.0, m_.frobenius_norm());
    if (dev > 1e-12 * scale)
        throw std::invalid_argument("HermitianMatrix: matrix is not Hermitian within tolerance");
}

SpectralTolerance::SpectralTolerance(double e, int sweeps) : eps(e), max_sweeps(sweeps) {
    require(eps > 0.0, "SpectralTolerance: eps must be positive");
    require(max_sweeps >= 1, "SpectralTolerance: max_sweeps must be >= 1");
}

namespace {

double offdiag_mass(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = 0; q < a.cols(); ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

// Cyclic two-sided Jacobi on a Hermitian matrix held in full storage.
// Each rotation U acts on the (p,q) plane with U[p][p]=c, U[p][q]=s,
// U[q][p]=-conj(s), U[q][q]=c and zeroes the (p,q) entry of U* A U; the
// rotation angle solves t^2 - 2wt - 1 = 0 with w = (a_pp - a_qq)/(2|a_pq|)
// and s carries the phase of a_pq.
std::vector<double> jacobi_eigvals(Matrix a, const SpectralTolerance& tol) {
    const std::size_t n = a.rows();
    const double base = a.frobenius_norm();
    std::vector<double> eig(n);
    if (base == 0.0) return eig;
    const double target = tol.eps * base;

    bool converged = false;
    for (int sweep = 0; sweep < tol.max_sweeps; ++sweep) {
        if (offdiag_mass(a) <= target) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = a(p, q);
                const double absb = std::abs(beta);
                if (absb < 1e-300) continue;
                const Complex phase = beta / absb;
                const double w = (a(p, p).real() - a(q, q).real()) / (2.0 * absb);
                const double t = (w >= 0.0) ? -1.0 / (w + std::sqrt(w * w + 1.0))
                                            : 1.0 / (-w + std::sqrt(w * w + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = phase * (t * c);
                const Complex sc = std::conj(s);
                // columns p and q
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - sc * arq;
                    a(r, q) = s * arp + c * arq;
                }
                // rows p and q
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = sc * apj + c * aqj;
                }
            }
        }
    }
    if (!converged && offdiag_mass(a) > target)
        throw std::runtime_error("herm_eigvals: Jacobi sweeps did not converge");

    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

// Exact Hermitian average (A + A*)/2; removes constructor-tolerated drift.
Matrix hermitize(const Matrix& a) {
    Matrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

}  // namespace

std::vector<double> herm_eigvals(const HermitianMatrix& a, SpectralTolerance tol) {
    return jacobi_eigvals(hermitize(a.get()), tol);
}

double operator_norm(const Matrix& a) {
    const std::size_t n = a.cols(), m = a.rows();
    // Deterministic start vector; the iteration is a pure function of A.
    CounterRng rng(0x5CA77E12ull ^ (static_cast<std::uint64_t>(m) << 32 | n));
    std::vector<Complex> v(n), w(m);
    for (Complex& z : v) z = rng.next_complex_gaussian();

    double rho_prev = -1.0;
    int stable = 0;
    for (int iter = 0; iter < 20000; ++iter) {
        // w = A v
        for (std::size_t i = 0; i < m; ++i) {
            Complex s = 0.0;
            const Complex* ai = a.row(i);
            for (std::size_t j = 0; j < n; ++j) s += ai[j] * v[j];
            w[i] = s;
        }
        double rho = 0.0;  // Rayleigh quotient of A*A at unit v
        for (const Complex& z : w) rho += std::norm(z);
        // v = A* w
        for (std::size_t j = 0; j < n; ++j) v[j] = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const Complex* ai = a.row(i);
            const Complex wi = w[i];
            for (std::size_t j = 0; j < n; ++j) v[j] += std::conj(ai[j]) * wi;
        }
        double nv = 0.0;
        for (const Complex& z : v) nv += std::norm(z);
        nv = std::sqrt(nv);
        if (nv == 0.0) return 0.0;
        const double inv = 1.0 / nv;
        for (Complex& z : v) z *= inv;

        if (std::abs(rho - rho_prev) <= 1e-13 * std::max(rho, 1e-280)) {
            if (++stable >= 2) return std::sqrt(rho);
        } else {
            stable = 0;
        }
        rho_prev = rho;
    }
    return std::sqrt(std::max(rho_prev, 0.0));
}

double schatten_norm(const Matrix& a, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
    if (p == kSchattenInf) return operator_norm(a);

    // Singular values as square roots of the spectrum of A*A.
    const Matrix gram = a.adjoint() * a;
    const std::vector<double> lam = jacobi_eigvals(hermitize(gram), SpectralTolerance{});
    std::vector<double> sv(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) sv[i] = std::sqrt(std::max(lam[i], 0.0));

    const double top = sv.empty() ? 0.0 : sv.front();
    if (top == 0.0) return 0.0;
    double sum = 0.0;
    for (double s : sv) sum += std::pow(s / top, p);
    return top * std::pow(sum, 1.0 / p);
}

}  // namespace nclab::matkernel
