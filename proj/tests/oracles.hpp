// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's spectral code paths:
// characteristic-polynomial bisection for Hermitian eigenvalues and the
// closed-form Catalan numbers.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nclab/matkernel.hpp"
#include "nclab/rng.hpp"

namespace nclab::testing {

using matkernel::Complex;
using matkernel::Matrix;

// det(A - lambda I) by LU with partial pivoting; real for Hermitian A.
inline double char_poly(const Matrix& a, double lambda) {
    const std::size_t n = a.rows();
    Matrix m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= lambda;
    double sign = 1.0;
    Complex det{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                piv = i;
            }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return sign * det.real();
}

// All eigenvalues of a Hermitian matrix by scanning the characteristic
// polynomial for sign changes and bisecting each bracket. Assumes simple
// eigenvalues (random matrices); throws if the count comes out wrong.
inline std::vector<double> bisection_eigvals(const Matrix& a) {
    const std::size_t n = a.rows();
    // Gershgorin interval.
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) radius += std::abs(a(i, j));
        lo = std::min(lo, a(i, i).real() - radius);
        hi = std::max(hi, a(i, i).real() + radius);
    }
    lo -= 1e-6;
    hi += 1e-6;

    const int grid = 20000;
    std::vector<double> roots;
    double prev_x = lo, prev_f = char_poly(a, lo);
    for (int k = 1; k <= grid; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / grid;
        const double f = char_poly(a, x);
        if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0) || f == 0.0) {
            double xl = prev_x, xr = x, fl = prev_f;
            for (int it = 0; it < 200 && xr - xl > 1e-13 * std::max(1.0, std::abs(xr)); ++it) {
                const double mid = 0.5 * (xl + xr);
                const double fm = char_poly(a, mid);
                if ((fl < 0.0) == (fm < 0.0)) {
                    xl = mid;
                    fl = fm;
                } else {
                    xr = mid;
                }
            }
            roots.push_back(0.5 * (xl + xr));
        }
        prev_x = x;
        prev_f = f;
    }
    if (roots.size() != n)
        throw std::runtime_error("bisection_eigvals: did not isolate all eigenvalues");
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

inline std::uint64_t binomial(int n, int k) {
    std::uint64_t num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= static_cast<std::uint64_t>(n - k + i);
        den *= static_cast<std::uint64_t>(i);
    }
    return num / den;
}

inline std::uint64_t catalan(int k) { return binomial(2 * k, k) / static_cast<std::uint64_t>(k + 1); }

inline Matrix random_matrix(std::size_t n, CounterRng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = Complex{rng.next_uniform(-1.0, 1.0), rng.next_uniform(-1.0, 1.0)};
    return a;
}

inline Matrix random_hermitian(std::size_t n, CounterRng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex{rng.next_uniform(-1.0, 1.0), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z{rng.next_uniform(-1.0, 1.0), rng.next_uniform(-1.0, 1.0)};
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

// Entries on a 1/64 grid keep binary arithmetic exact in the identity tests.
inline Matrix random_dyadic(std::size_t n, CounterRng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long u = static_cast<long>(rng.next_u64() % 129) - 64;
            const long v = static_cast<long>(rng.next_u64() % 129) - 64;
            a(i, j) = Complex{static_cast<double>(u) / 64.0, static_cast<double>(v) / 64.0};
        }
    return a;
}

}  // namespace nclab::testing
