// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/ensembles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nclab::ensembles {

using matkernel::Complex;

Kind kind_from_string(std::string_view name) {
    if (name == "wigner_gaussian_real") return Kind::wigner_gaussian_real;
    if (name == "wigner_gaussian_complex") return Kind::wigner_gaussian_complex;
    if (name == "wigner_rademacher") return Kind::wigner_rademacher;
    if (name == "wigner_uniform_bounded") return Kind::wigner_uniform_bounded;
    if (name == "haar_orthogonal_scaled") return Kind::haar_orthogonal_scaled;
    if (name == "haar_unitary_scaled") return Kind::haar_unitary_scaled;
    if (name == "hs_sphere_real") return Kind::hs_sphere_real;
    if (name == "hs_sphere_complex") return Kind::hs_sphere_complex;
    throw std::invalid_argument("unknown ensemble kind: " + std::string(name));
}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::wigner_gaussian_real: return "wigner_gaussian_real";
        case Kind::wigner_gaussian_complex: return "wigner_gaussian_complex";
        case Kind::wigner_rademacher: return "wigner_rademacher";
        case Kind::wigner_uniform_bounded: return "wigner_uniform_bounded";
        case Kind::haar_orthogonal_scaled: return "haar_orthogonal_scaled";
        case Kind::haar_unitary_scaled: return "haar_unitary_scaled";
        case Kind::hs_sphere_real: return "hs_sphere_real";
        case Kind::hs_sphere_complex: return "hs_sphere_complex";
    }
    throw std::invalid_argument("invalid ensemble kind");
}

bool EnsembleSpec::is_wigner() const {
    return kind == Kind::wigner_gaussian_real || kind == Kind::wigner_gaussian_complex ||
           kind == Kind::wigner_rademacher || kind == Kind::wigner_uniform_bounded;
}

void EnsembleSpec::validate() const {
    to_string(kind);
    if (!(diag_variance >= 0.0) || !std::isfinite(diag_variance))
        throw std::invalid_argument("EnsembleSpec: diag_variance must be finite and >= 0");
    if (!(offdiag_variance > 0.0) || !std::isfinite(offdiag_variance))
        throw std::invalid_argument("EnsembleSpec: offdiag_variance must be finite and > 0");
}

CcpParams::CcpParams(double k, double kap) : big_k(k), kappa(kap) {
    if (!(big_k > 0.0) || !(kappa > 0.0))
        throw std::invalid_argument("CcpParams: constants must be positive");
}

namespace {

// Hermitian fill in a fixed order (upper triangle row by row, diagonal
// first in each row); the order is part of the determinism contract.
template <typename DiagFn, typename OffFn>
Matrix fill_hermitian(std::size_t n, DiagFn&& diag, OffFn&& off) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = diag();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = off();
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

Matrix wigner(const EnsembleSpec& spec, std::size_t n, CounterRng& rng) {
    const double sd = std::sqrt(spec.diag_variance);
    const double so = std::sqrt(spec.offdiag_variance);
    switch (spec.kind) {
        case Kind::wigner_gaussian_real:
            return fill_hermitian(
                n, [&] { return Complex{sd * rng.next_gaussian(), 0.0}; },
                [&] { return Complex{so * rng.next_gaussian(), 0.0}; });
        case Kind::wigner_gaussian_complex:
            // E|off|^2 = offdiag_variance; the diagonal of a Hermitian matrix is real.
            return fill_hermitian(
                n, [&] { return Complex{sd * rng.next_gaussian(), 0.0}; },
                [&] {
                    const double r = 0.7071067811865475244 * so;
                    return Complex{r * rng.next_gaussian(), r * rng.next_gaussian()};
                });
        case Kind::wigner_rademacher:
            return fill_hermitian(
                n, [&] { return Complex{rng.next_sign() ? sd : -sd, 0.0}; },
                [&] { return Complex{rng.next_sign() ? so : -so, 0.0}; });
        case Kind::wigner_uniform_bounded: {
            // Uniform on [-sqrt(3 v), sqrt(3 v)] has variance v.
            const double bd = std::sqrt(3.0) * sd;
            const double bo = std::sqrt(3.0) * so;
            return fill_hermitian(
                n, [&] { return Complex{rng.next_uniform(-bd, bd), 0.0}; },
                [&] { return Complex{rng.next_uniform(-bo, bo), 0.0}; });
        }
        default: throw std::invalid_argument("wigner: not a Wigner kind");
    }
}

// Householder QR returning Q and the diagonal of R.
void householder_qr(Matrix& a, Matrix& q, std::vector<Complex>& rdiag) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Complex>> reflectors;
    reflectors.reserve(n);
    rdiag.assign(n, Complex{0.0, 0.0});

    for (std::size_t k = 0; k < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        const Complex x0 = a(k, k);
        const double ax0 = std::abs(x0);
        const Complex phase = (ax0 > 0.0) ? x0 / ax0 : Complex{1.0, 0.0};
        const Complex alpha = -phase * xnorm;

        std::vector<Complex> v(n - k, Complex{0.0, 0.0});
        v[0] = x0 - alpha;
        for (std::size_t i = k + 1; i < n; ++i) v[i - k] = a(i, k);
        double vnorm2 = 0.0;
        for (const Complex& z : v) vnorm2 += std::norm(z);

        rdiag[k] = alpha;
        if (vnorm2 <= 0.0 || xnorm == 0.0) {
            rdiag[k] = x0;
            reflectors.emplace_back();
            continue;
        }
        // Apply H = I - 2 v v* / (v* v) to the trailing block.
        for (std::size_t j = k; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i - k]) * a(i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = k; i < n; ++i) a(i, j) -= dot * v[i - k];
        }
        reflectors.push_back(std::move(v));
    }

    // Accumulate Q = H_0 H_1 ... H_{n-1} by backward application to I.
    q = Matrix::identity(n);
    for (std::size_t kk = n; kk-- > 0;) {
        const std::vector<Complex>& v = reflectors[kk];
        if (v.empty()) continue;
        double vnorm2 = 0.0;
        for (const Complex& z : v) vnorm2 += std::norm(z);
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = kk; i < n; ++i) dot += std::conj(v[i - kk]) * q(i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = kk; i < n; ++i) q(i, j) -= dot * v[i - kk];
        }
    }
}

// Determinant by LU with partial pivoting; used only for the special-group
// correction, where |det| = 1.
Complex determinant(Matrix a) {
    const std::size_t n = a.rows();
    Complex det{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(a(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        const Complex inv = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a(i, k) * inv;
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

}  // namespace

Matrix haar_unitary(std::size_t n, Seed seed, bool special, bool orthogonal) {
    if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
    CounterRng rng(seed);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = orthogonal ? Complex{rng.next_gaussian(), 0.0} : rng.next_complex_gaussian();

    Matrix q;
    std::vector<Complex> rdiag;
    householder_qr(g, q, rdiag);

    for (std::size_t j = 0; j < n; ++j) {
        const double m = std::abs(rdiag[j]);
        const Complex phase = (m > 0.0) ? rdiag[j] / m : Complex{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
    }

    if (special) {
        const Complex det = determinant(q);
        if (std::abs(det) > 0.0) {
            const Complex fix = 1.0 / det;
            for (std::size_t i = 0; i < n; ++i) q(i, 0) *= fix;
        }
    }
    return q;
}

HermitianMatrix hs_sphere_sample(std::size_t n, bool real_case, Seed seed) {
    if (n < 1) throw std::invalid_argument("hs_sphere_sample: n must be >= 1");
    CounterRng rng(seed);
    // Isotropic Gaussian direction in the Hilbert-Schmidt metric: standard
    // normal coefficients on an orthonormal basis of the Hermitian matrices.
    const double inv_sqrt2 = 0.7071067811865475244;
    Matrix a = real_case
                   ? fill_hermitian(
                         n, [&] { return Complex{rng.next_gaussian(), 0.0}; },
                         [&] { return Complex{inv_sqrt2 * rng.next_gaussian(), 0.0}; })
                   : fill_hermitian(
                         n, [&] { return Complex{rng.next_gaussian(), 0.0}; },
                         [&] {
                             return Complex{inv_sqrt2 * rng.next_gaussian(),
                                            inv_sqrt2 * rng.next_gaussian()};
                         });
    const double norm = a.frobenius_norm();
    if (norm == 0.0) throw std::runtime_error("hs_sphere_sample: degenerate direction");
    const double nd = static_cast<double>(n);
    const double radius = real_case ? std::sqrt(nd * (nd + 1.0) / 2.0) : nd;
    a *= Complex{radius / norm, 0.0};
    return HermitianMatrix(std::move(a));
}

Matrix sample(const EnsembleSpec& spec, std::size_t n, Seed seed) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    switch (spec.kind) {
        case Kind::wigner_gaussian_real:
        case Kind::wigner_gaussian_complex:
        case Kind::wigner_rademacher:
        case Kind::wigner_uniform_bounded: {
            CounterRng rng(seed);
            return wigner(spec, n, rng);
        }
        case Kind::haar_orthogonal_scaled:
        case Kind::haar_unitary_scaled: {
            Matrix u = haar_unitary(n, seed, /*special=*/false,
                                    spec.kind == Kind::haar_orthogonal_scaled);
            u *= Complex{std::sqrt(static_cast<double>(n)), 0.0};
            return u;
        }
        case Kind::hs_sphere_real: return hs_sphere_sample(n, true, seed).get();
        case Kind::hs_sphere_complex: return hs_sphere_sample(n, false, seed).get();
    }
    throw std::invalid_argument("sample: invalid ensemble kind");
}

}  // namespace nclab::ensembles
