// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained verification suites over randomized instances: the
// polarization/dilation/Fourier/split identities, kernel norm and spectrum
// properties, ensemble sanity, and the convex-extension contracts. Each
// suite reports its case count, failures and worst observed residual.

#pragma once

#include <string>
#include <vector>

#include "nclab/rng.hpp"

namespace nclab::verify {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst = 0.0;  // worst normalized residual or margin observed
    std::string note;

    bool passed() const { return failures == 0; }
};

// Residual tolerance 1e-9 (normalized), random d <= 6, n <= 16.
SuiteResult polarization_suite(Seed seed, int cases);
SuiteResult dilation_suite(Seed seed, int cases);
SuiteResult fourier_suite(int max_k);
SuiteResult split_suite(Seed seed, int cases);

// Convex-extension contracts: bound, interior exactness, radius
// monotonicity, truncated Lipschitz estimate. d in {2,4}, n <= 8.
SuiteResult extension_suite(Seed seed, int cases);

// Schatten monotonicity, Hoelder interpolation, spectral-map Lipschitz
// property, trace cyclicity, and the finite-difference gradient of tr A^d.
SuiteResult kernel_suite(Seed seed, int cases);

// Haar unitarity, sphere radii, Rademacher entries, sampler determinism.
SuiteResult ensemble_suite(Seed seed);

std::vector<SuiteResult> identities_suites(Seed seed, int cases);

}  // namespace nclab::verify
