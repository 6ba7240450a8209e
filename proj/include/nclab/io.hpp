// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Stable file formats: experiment CSV (replica,n,seed,re_z,im_z), tail CSV
// (t,survival,count), plain key=value config files, matrix CSV with "a+bi"
// entries, and the fit summary line. Floats carry 17 significant digits so
// every file round-trips exactly.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nclab/conclab.hpp"
#include "nclab/matkernel.hpp"

namespace nclab::io {

using matkernel::Complex;
using matkernel::Matrix;

std::string format_double(double x);    // %.17g
std::string format_complex(Complex z);  // "a+bi", e.g. "2+0i", "-1.5-0.25i"
Complex parse_complex(const std::string& text);

void write_experiment_csv(std::ostream& os, const conclab::ExperimentResult& res);

struct SampleRow {
    std::size_t replica;
    std::size_t n;
    std::uint64_t seed;
    Complex z;
};

struct SampleTable {
    std::vector<SampleRow> rows;
    std::size_t n = 0;

    std::vector<Complex> samples() const;
};

SampleTable read_experiment_csv(std::istream& is);

void write_tail_csv(std::ostream& os, const conclab::TailEstimate& tail);

// "C_hat=... c_hat=... residual=... n=... d=..."
std::string format_fit(const conclab::FittedBound& fit);

// Plain "key = value" lines; '#' starts a comment. Keys: poly, m, n,
// ensemble, replicas, seed, scale_by_sqrt_n, and the optional variance knobs
// diag_variance / offdiag_variance.
conclab::ExperimentConfig read_config(std::istream& is);

void write_matrix_csv(std::ostream& os, const Matrix& m);
Matrix read_matrix_csv(std::istream& is);

}  // namespace nclab::io
