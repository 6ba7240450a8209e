// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random-matrix ensembles: Wigner families (Gaussian, Rademacher,
// bounded uniform), scaled Haar orthogonal/unitary matrices, and uniform
// points on the Hilbert-Schmidt sphere of Hermitian matrices. Samplers are
// pure functions of (spec, n, seed).

#pragma once

#include <cstddef>
#include <string_view>

#include "nclab/matkernel.hpp"
#include "nclab/rng.hpp"

namespace nclab::ensembles {

using matkernel::HermitianMatrix;
using matkernel::Matrix;

enum class Kind {
    wigner_gaussian_real,
    wigner_gaussian_complex,
    wigner_rademacher,
    wigner_uniform_bounded,
    haar_orthogonal_scaled,
    haar_unitary_scaled,
    hs_sphere_real,
    hs_sphere_complex,
};

Kind kind_from_string(std::string_view name);
std::string_view to_string(Kind kind);

struct EnsembleSpec {
    Kind kind = Kind::wigner_gaussian_real;
    double diag_variance = 1.0;     // Wigner kinds only
    double offdiag_variance = 1.0;  // Wigner kinds only

    void validate() const;
    bool is_wigner() const;
};

// Subgaussian concentration parameters K e^{-kappa t^2}; carried as fitted
// metadata, never assumed known a priori.
struct CcpParams {
    double big_k;
    double kappa;

    CcpParams(double k, double kap);
};

// Draws one matrix. Wigner and sphere kinds are Hermitian (real symmetric
// for the real kinds); Haar kinds return sqrt(n) times a group element.
Matrix sample(const EnsembleSpec& spec, std::size_t n, Seed seed);

// Haar-distributed element of U(n), O(n), SU(n) or SO(n): Ginibre + QR with
// the diagonal phase correction (column j of Q is multiplied by
// r_jj / |r_jj|, equivalently R is normalized to a positive diagonal, which
// is what makes the QR factor exactly Haar). `special` rescales one column
// to fix the determinant at 1.
Matrix haar_unitary(std::size_t n, Seed seed, bool special, bool orthogonal);

// Uniform point on the Hilbert-Schmidt sphere of Hermitian matrices, radius
// sqrt(n(n+1)/2) in the real case and n in the complex case.
HermitianMatrix hs_sphere_sample(std::size_t n, bool real_case, Seed seed);

}  // namespace nclab::ensembles
