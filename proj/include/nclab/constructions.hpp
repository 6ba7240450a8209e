// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Algebraic and convex-analytic devices: polarization identities expressing
// A^d through d-th powers of Hermitian combinations, the cyclic block
// dilation whose d-th power trace is d times a product trace, the discrete
// Fourier matrix behind the polarization proof, the split of an odd power
// trace into two convex pieces, and a sampled realization of the minimal
// convex Lipschitz extension of tr A^d from a Schatten ball.

#pragma once

#include <span>
#include <vector>

#include "nclab/matkernel.hpp"
#include "nclab/rng.hpp"

namespace nclab::constructions {

using matkernel::Complex;
using matkernel::HermitianMatrix;
using matkernel::Matrix;

struct PolarizationTerm {
    Complex phase;      // e^{i pi j d/(d+1)}, unimodular
    HermitianMatrix y;  // e^{-i theta_j} A + e^{i theta_j} A*, theta_j = pi j/(d+1)
};

// The d+1 Hermitian polarization terms of A; averaging phase_j * y_j^d over j
// reconstructs A^d.
std::vector<PolarizationTerm> polarization_terms(const Matrix& a, int d);

// Max-entry residual of A^d - (1/(d+1)) sum_j (A + w^j B)^d over the
// (d+1)-th roots of unity w^j, normalized by max(1, (||A||_inf+||B||_inf)^d).
// Zero B gives exactly zero.
double polarize_pair(const Matrix& a, const Matrix& b, int d);

// Unnormalized max-entry residual of the phase-weighted Hermitian
// reconstruction of A^d from polarization_terms, for direct tolerance checks.
double polarization_residual(const Matrix& a, int d);

// Block matrix of size dn x dn with Y_1..Y_{d-1} on the block superdiagonal
// and Y_d in the bottom-left corner; tr X^d = d tr(Y_1 ... Y_d) and
// tr X^k = 0 for 1 <= k < d.
Matrix cyclic_dilation(std::span<const Matrix> blocks);

// k x k unitary Fourier matrix, entry (j,l) = e^{2 pi i j l / k} / sqrt(k).
Matrix fourier_matrix(int k);

// Exact k-th root of unity e^{2 pi i j / k}; axis values are exact.
Complex root_of_unity(long j, long k);

struct OddPowerSplit {
    double plus;   // sum of max(lambda_i, 0)^d
    double minus;  // sum of max(-lambda_i, 0)^d
};

// Splits tr A^d (d odd) into the difference of two convex spectral sums.
OddPowerSplit odd_power_split(const HermitianMatrix& a, int d);

// Schatten-(2(d-1)) ball of radius `radius` on which tr A^d is
// (d radius^{d-1})-Lipschitz; d must be even and >= 2 for the convex case.
struct TruncationSpec {
    double radius;
    int degree;

    TruncationSpec(double a, int d);
    double lipschitz_constant() const;
};

// Lower approximation of the minimal convex extension of tr A^d from the
// truncation ball: the supremum of supporting-hyperplane values
// F(Y) + <grad F(Y), A - Y> over support_count sampled rays inside the ball
// plus the radial projection of A itself. Always <= tr A^d; exact when A
// lies inside the ball; nondecreasing in the radius for a fixed seed.
double convex_extension_lb(const TruncationSpec& trunc, const HermitianMatrix& a,
                           int support_count, Seed seed);

}  // namespace nclab::constructions
