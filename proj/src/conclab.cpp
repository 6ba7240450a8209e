// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/conclab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace nclab::conclab {

using matkernel::Matrix;

void ExperimentConfig::validate() const {
    if (m < 1) throw std::invalid_argument("ExperimentConfig: m must be >= 1");
    if (n < 1) throw std::invalid_argument("ExperimentConfig: n must be >= 1");
    if (replicas < 1) throw std::invalid_argument("ExperimentConfig: replicas must be >= 1");
    if (ensemble.empty() || (ensemble.size() != 1 && ensemble.size() != static_cast<std::size_t>(m)))
        throw std::invalid_argument("ExperimentConfig: need one ensemble spec, or one per variable");
    for (const auto& spec : ensemble) spec.validate();
    ncpoly::parse(poly_text, m);  // throws ParseError on bad input
}

const ensembles::EnsembleSpec& ExperimentConfig::spec_for(int var) const {
    return ensemble.size() == 1 ? ensemble[0] : ensemble[static_cast<std::size_t>(var)];
}

std::uint64_t replica_seed(Seed master, std::size_t replica) {
    return derive(master, static_cast<std::uint64_t>(replica));
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const ncpoly::Polynomial poly = ncpoly::parse(cfg.poly_text, cfg.m);
    const int d = std::max(poly.degree(), 1);

    // Crude elementary-operation budget: replicas * d * n^3.
    const double budget = static_cast<double>(cfg.replicas) * d * std::pow(cfg.n, 3.0);
    if (budget > 1e12 && !cfg.force)
        throw std::runtime_error("run_experiment: budget exceeded (replicas*d*n^3 > 1e12); "
                                 "pass force to override");

    ExperimentResult res;
    res.config = cfg;
    res.samples.assign(cfg.replicas, Complex{0.0, 0.0});

    const double scale = cfg.scale_by_sqrt_n ? 1.0 / std::sqrt(static_cast<double>(cfg.n)) : 1.0;

    auto worker_body = [&](std::size_t i) {
        const Seed rep{replica_seed(cfg.master_seed, i)};
        std::vector<Matrix> xs;
        xs.reserve(static_cast<std::size_t>(cfg.m));
        for (int j = 0; j < cfg.m; ++j) {
            Matrix x = ensembles::sample(cfg.spec_for(j), cfg.n,
                                         Seed{derive(rep, static_cast<std::uint64_t>(j))});
            if (scale != 1.0) x *= Complex{scale, 0.0};
            xs.push_back(std::move(x));
        }
        res.samples[i] = ncpoly::evaluate_trace(poly, xs);
    };

    unsigned want = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
    want = std::min<unsigned>(want, static_cast<unsigned>(cfg.replicas));
    if (want <= 1) {
        for (std::size_t i = 0; i < cfg.replicas; ++i) worker_body(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned t = 0; t < want; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cfg.replicas; i = next.fetch_add(1))
                    worker_body(i);
            });
        for (std::thread& t : pool) t.join();
    }

    Complex sum = 0.0;
    for (const Complex& z : res.samples) sum += z;
    res.mean = sum / static_cast<double>(cfg.replicas);

    std::vector<double> re(cfg.replicas), im(cfg.replicas);
    for (std::size_t i = 0; i < cfg.replicas; ++i) {
        re[i] = res.samples[i].real();
        im[i] = res.samples[i].imag();
    }
    const std::size_t mid = (cfg.replicas - 1) / 2;  // lower median
    std::nth_element(re.begin(), re.begin() + static_cast<std::ptrdiff_t>(mid), re.end());
    std::nth_element(im.begin(), im.begin() + static_cast<std::ptrdiff_t>(mid), im.end());
    res.median = {re[mid], im[mid]};
    return res;
}

TailEstimate::TailEstimate(std::vector<double> g, std::vector<double> s, std::size_t reps)
    : grid(std::move(g)), survival(std::move(s)), replicas(reps) {
    if (grid.empty() || grid.size() != survival.size())
        throw std::invalid_argument("TailEstimate: grid and survival sizes must match and be nonempty");
    if (replicas < 1) throw std::invalid_argument("TailEstimate: replicas must be >= 1");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] >= 0.0)) throw std::invalid_argument("TailEstimate: grid must be nonnegative");
        if (k > 0 && !(grid[k] > grid[k - 1]))
            throw std::invalid_argument("TailEstimate: grid must be strictly increasing");
        if (!(survival[k] >= 0.0 && survival[k] <= 1.0))
            throw std::invalid_argument("TailEstimate: survival values must lie in [0,1]");
        if (k > 0 && survival[k] > survival[k - 1] + 1e-15)
            throw std::invalid_argument("TailEstimate: survival must be nonincreasing");
    }
    if (grid.front() == 0.0 && survival.front() != 1.0)
        throw std::invalid_argument("TailEstimate: survival at t = 0 must equal 1");
}

TailEstimate tail_estimate(std::span<const Complex> samples, std::span<const double> grid) {
    if (samples.empty()) throw std::invalid_argument("tail_estimate: no samples");
    if (grid.empty()) throw std::invalid_argument("tail_estimate: empty grid");
    Complex mean = 0.0;
    for (const Complex& z : samples) mean += z;
    mean /= static_cast<double>(samples.size());

    std::vector<double> dev(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) dev[i] = std::abs(samples[i] - mean);
    std::sort(dev.begin(), dev.end());

    std::vector<double> surv(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto it = std::lower_bound(dev.begin(), dev.end(), grid[k]);
        surv[k] = static_cast<double>(dev.end() - it) / static_cast<double>(dev.size());
    }
    return TailEstimate(std::vector<double>(grid.begin(), grid.end()), std::move(surv),
                        samples.size());
}

TailEstimate tail_estimate(const ExperimentResult& res, std::span<const double> grid) {
    return tail_estimate(std::span<const Complex>(res.samples), grid);
}

double sample_std(std::span<const Complex> samples) {
    if (samples.empty()) return 0.0;
    Complex mean = 0.0;
    for (const Complex& z : samples) mean += z;
    mean /= static_cast<double>(samples.size());
    double s = 0.0;
    for (const Complex& z : samples) s += std::norm(z - mean);
    return std::sqrt(s / static_cast<double>(samples.size()));
}

std::vector<double> default_grid(std::span<const Complex> samples) {
    if (samples.size() < 2) throw std::invalid_argument("default_grid: need at least 2 samples");
    Complex mean = 0.0;
    for (const Complex& z : samples) mean += z;
    mean /= static_cast<double>(samples.size());
    double maxdev = 0.0;
    for (const Complex& z : samples) maxdev = std::max(maxdev, std::abs(z - mean));
    const double sigma = sample_std(samples);
    if (sigma == 0.0 || maxdev == 0.0)
        throw std::invalid_argument("default_grid: degenerate samples (zero spread)");

    const double lo = 0.05 * sigma;
    const double ratio = maxdev / lo;
    std::vector<double> grid(40);
    for (int k = 0; k < 40; ++k) grid[static_cast<std::size_t>(k)] =
        lo * std::pow(ratio, static_cast<double>(k) / 39.0);
    grid.back() = maxdev;
    return grid;
}

double theoretical_bound(double t, std::size_t n, int d, double big_c, double rate) {
    if (!(t >= 0.0)) throw std::invalid_argument("theoretical_bound: t must be >= 0");
    if (n < 1 || d < 1) throw std::invalid_argument("theoretical_bound: n and d must be >= 1");
    if (!(big_c > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("theoretical_bound: constants must be positive");
    const double branch =
        std::min(t * t, static_cast<double>(n) * std::pow(t, 2.0 / static_cast<double>(d)));
    const double v = big_c * std::exp(-rate * branch);
    return std::clamp(v, 0.0, big_c);
}

FittedBound fit_tail_constants(const TailEstimate& tail, std::size_t n, int degree) {
    if (n < 1 || degree < 1) throw std::invalid_argument("fit_tail_constants: bad n or degree");
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < tail.grid.size(); ++k) {
        if (tail.survival[k] <= 0.0) continue;  // dropped bins
        const double t = tail.grid[k];
        xs.push_back(std::min(t * t, static_cast<double>(n) *
                                         std::pow(t, 2.0 / static_cast<double>(degree))));
        ys.push_back(std::log(tail.survival[k]));
    }
    if (xs.size() < 3)
        throw std::invalid_argument("fit_tail_constants: need at least 3 positive-survival bins");

    const double nn = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    const double det = nn * sxx - sx * sx;
    if (det <= 0.0) throw std::runtime_error("fit_tail_constants: degenerate grid");
    const double slope = (nn * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / nn;

    double rss = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double r = ys[k] - (intercept + slope * xs[k]);
        rss += r * r;
    }

    FittedBound fit{std::exp(intercept), -slope, std::sqrt(rss / nn), n, degree};
    if (!(fit.rate > 0.0))
        throw std::runtime_error("fit_tail_constants: fitted rate is not positive");
    return fit;
}

std::vector<double> lq_norms(std::span<const Complex> samples, std::span<const double> qs) {
    if (samples.empty()) throw std::invalid_argument("lq_norms: no samples");
    if (qs.empty()) throw std::invalid_argument("lq_norms: no exponents");
    for (double q : qs)
        if (!(q >= 1.0)) throw std::invalid_argument("lq_norms: exponents must be >= 1");

    Complex mean = 0.0;
    for (const Complex& z : samples) mean += z;
    mean /= static_cast<double>(samples.size());
    std::vector<double> dev(samples.size());
    double top = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        dev[i] = std::abs(samples[i] - mean);
        top = std::max(top, dev[i]);
    }

    std::vector<double> out;
    out.reserve(qs.size());
    for (double q : qs) {
        if (top == 0.0) {
            out.push_back(0.0);
            continue;
        }
        double s = 0.0;
        for (double v : dev) s += std::pow(v / top, q);  // scaled to avoid overflow
        out.push_back(top * std::pow(s / static_cast<double>(dev.size()), 1.0 / q));
    }
    return out;
}

std::vector<double> lq_norms(const ExperimentResult& res, std::span<const double> qs) {
    return lq_norms(std::span<const Complex>(res.samples), qs);
}

double median_mean_gap(const ExperimentResult& res) {
    if (res.samples.size() < 2)
        throw std::invalid_argument("median_mean_gap: need at least 2 replicas");
    double mean_re = 0.0;
    for (const Complex& z : res.samples) mean_re += z.real();
    mean_re /= static_cast<double>(res.samples.size());
    std::vector<double> re(res.samples.size());
    for (std::size_t i = 0; i < re.size(); ++i) re[i] = res.samples[i].real();
    const std::size_t mid = (re.size() - 1) / 2;
    std::nth_element(re.begin(), re.begin() + static_cast<std::ptrdiff_t>(mid), re.end());
    return std::abs(mean_re - re[mid]);
}

std::vector<ConvergenceRow> convergence_study(const ExperimentConfig& base,
                                              std::span<const std::size_t> n_list) {
    if (n_list.empty()) throw std::invalid_argument("convergence_study: empty n list");
    base.validate();
    const ncpoly::Polynomial poly = ncpoly::parse(base.poly_text, base.m);
    const Complex limit = freeprob::free_moment(poly);

    bool applicable = true;
    for (const auto& spec : base.ensemble)
        if (!spec.is_wigner() || spec.offdiag_variance != 1.0) applicable = false;

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t n : n_list) {
        ExperimentConfig cfg = base;
        cfg.n = n;
        cfg.master_seed = Seed{derive(base.master_seed, n)};  // independent stream per n
        const ExperimentResult res = run_experiment(cfg);

        const double inv_n = 1.0 / static_cast<double>(n);
        std::vector<Complex> scaled(res.samples.size());
        for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = res.samples[i] * inv_n;
        Complex mean = res.mean * inv_n;
        const double r = static_cast<double>(scaled.size());
        double var = 0.0;
        for (const Complex& z : scaled) var += std::norm(z - mean);
        const double stderr_mean = (scaled.size() > 1)
                                       ? std::sqrt(var / (r - 1.0)) / std::sqrt(r)
                                       : 0.0;
        rows.push_back(ConvergenceRow{n, mean, stderr_mean, limit, applicable});
    }
    return rows;
}

}  // namespace nclab::conclab
