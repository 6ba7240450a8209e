// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo harness: samples Z = tr P(X_1/sqrt(n), ..., X_m/sqrt(n)) over
// seeded replicas, estimates tails and L_q norms of the deviations, fits the
// subgaussian/min-branch bound constants, and tabulates convergence of
// n^{-1} Z against the free semicircular limit.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nclab/ensembles.hpp"
#include "nclab/freeprob.hpp"
#include "nclab/matkernel.hpp"
#include "nclab/ncpoly.hpp"
#include "nclab/rng.hpp"

namespace nclab::conclab {

using matkernel::Complex;

struct ExperimentConfig {
    std::string poly_text;
    int m = 1;
    std::size_t n = 1;
    // One shared spec, or one per variable.
    std::vector<ensembles::EnsembleSpec> ensemble{ensembles::EnsembleSpec{}};
    std::size_t replicas = 1;
    Seed master_seed{0};
    bool scale_by_sqrt_n = true;
    bool force = false;  // overrides the operation budget guard
    int threads = 0;     // 0 = hardware default

    void validate() const;
    const ensembles::EnsembleSpec& spec_for(int var) const;  // 0-based variable
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<Complex> samples;  // indexed by replica
    Complex mean;
    Complex median;  // componentwise lower median
};

// Per-replica seeds are derive(derive(master, replica), variable); results
// are index-keyed and independent of worker scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::uint64_t replica_seed(Seed master, std::size_t replica);

// Empirical survival function of |Z - mean| on an increasing grid.
struct TailEstimate {
    std::vector<double> grid;
    std::vector<double> survival;
    std::size_t replicas = 0;

    TailEstimate(std::vector<double> grid, std::vector<double> survival, std::size_t replicas);
};

TailEstimate tail_estimate(std::span<const Complex> samples, std::span<const double> grid);
TailEstimate tail_estimate(const ExperimentResult& res, std::span<const double> grid);

// 40 geometric points from 0.05 sigma-hat to the max observed deviation.
std::vector<double> default_grid(std::span<const Complex> samples);

// C exp[-c min(t^2, n t^{2/d})], clipped to [0, C].
double theoretical_bound(double t, std::size_t n, int d, double big_c, double rate);

struct FittedBound {
    double big_c;     // C
    double rate;      // c
    double residual;  // rms of log-survival residuals
    std::size_t n;
    int degree;
};

// Least squares of log survival against -min(t^2, n t^{2/d}) with intercept
// log C; zero-survival bins are dropped, and at least three positive bins
// are required.
FittedBound fit_tail_constants(const TailEstimate& tail, std::size_t n, int degree);

// Empirical (E |Z - mean|^q)^{1/q}, one value per q.
std::vector<double> lq_norms(std::span<const Complex> samples, std::span<const double> qs);
std::vector<double> lq_norms(const ExperimentResult& res, std::span<const double> qs);

// |mean - lower median| of the real parts.
double median_mean_gap(const ExperimentResult& res);

struct ConvergenceRow {
    std::size_t n;
    Complex mean_scaled;  // mean of n^{-1} Z over replicas
    double std_error;     // Monte Carlo standard error of that mean
    Complex free_limit;
    bool limit_applicable;  // unit-variance Wigner hypothesis satisfied
};

// Runs the experiment template at each n and compares the scaled mean with
// the free semicircular moment. Non-Wigner ensembles still run but the
// limit column is flagged inapplicable.
std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& base,
                                              std::span<const std::size_t> n_list);

double sample_std(std::span<const Complex> samples);  // rms deviation about the mean

}  // namespace nclab::conclab
