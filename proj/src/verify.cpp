// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nclab/constructions.hpp"
#include "nclab/ensembles.hpp"
#include "nclab/matkernel.hpp"

namespace nclab::verify {

using matkernel::Complex;
using matkernel::HermitianMatrix;
using matkernel::Matrix;

namespace {

Matrix random_matrix(std::size_t n, CounterRng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = Complex{rng.next_uniform(-1.0, 1.0), rng.next_uniform(-1.0, 1.0)};
    return a;
}

Matrix random_hermitian(std::size_t n, CounterRng& rng) {
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

void record(SuiteResult& r, double badness, double tolerance) {
    ++r.cases;
    r.worst = std::max(r.worst, badness);
    if (!(badness < tolerance)) ++r.failures;
}

}  // namespace

SuiteResult polarization_suite(Seed seed, int cases) {
    SuiteResult r;
    r.name = "polarization";
    CounterRng rng(seed);
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.next_u64() % 15;  // <= 16
        const int d = 1 + static_cast<int>(rng.next_u64() % 6);
        const Matrix a = random_matrix(n, rng);
        const Matrix b = random_matrix(n, rng);

        // Hermitian form, normalized like the pair form.
        const double opn = matkernel::operator_norm(a);
        const double scale = std::max(1.0, std::pow(opn, static_cast<double>(d)));
        const double res_herm = constructions::polarization_residual(a, d) / scale;
        record(r, res_herm, 1e-9);

        const double res_pair = constructions::polarize_pair(a, b, d);
        record(r, res_pair, 1e-9);
    }
    return r;
}

SuiteResult dilation_suite(Seed seed, int cases) {
    SuiteResult r;
    r.name = "dilation";
    CounterRng rng(seed);
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.next_u64() % 15;
        const int d = 2 + static_cast<int>(rng.next_u64() % 5);  // 2..6
        std::vector<Matrix> ys;
        for (int k = 0; k < d; ++k) ys.push_back(random_matrix(n, rng));
        const Matrix x = constructions::cyclic_dilation(ys);

        Matrix prod = ys[0];
        for (int k = 1; k < d; ++k) prod = prod * ys[static_cast<std::size_t>(k)];
        const Complex want = static_cast<double>(d) * prod.trace();
        const Complex got = matkernel::power_trace(x, d);
        const double rel = std::abs(got - want) / std::max(1.0, std::abs(want));
        record(r, rel, 1e-9);

        // Powers below the cycle length have exactly zero trace.
        Matrix xp = x;
        for (int k = 1; k < d; ++k) {
            record(r, std::abs(xp.trace()), 1e-15);
            xp = xp * x;
        }

        // One full extra cycle: tr X^{2d} = d tr((Y_1...Y_d)^2).
        const Complex want2 = static_cast<double>(d) * matkernel::trace_product(prod, prod);
        const Complex got2 = matkernel::power_trace(x, 2 * d);
        record(r, std::abs(got2 - want2) / std::max(1.0, std::abs(want2)), 1e-9);
    }
    return r;
}

SuiteResult fourier_suite(int max_k) {
    SuiteResult r;
    r.name = "fourier";
    for (int k = 2; k <= max_k; ++k) {
        const Matrix f = constructions::fourier_matrix(k);
        Matrix gram = f.adjoint() * f;
        gram -= Matrix::identity(static_cast<std::size_t>(k));
        record(r, gram.max_abs(), 1e-12);

        const double inv = 1.0 / std::sqrt(static_cast<double>(k));
        double row0 = 0.0;
        for (int l = 0; l < k; ++l)
            row0 = std::max(row0, std::abs(f(0, static_cast<std::size_t>(l)) - Complex{inv, 0.0}));
        record(r, row0, 1e-15);
    }
    return r;
}

SuiteResult split_suite(Seed seed, int cases) {
    SuiteResult r;
    r.name = "odd-power split";
    CounterRng rng(seed);
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.next_u64() % 15;
        const int d = (rng.next_u64() % 2 == 0) ? 3 : 5;
        const HermitianMatrix a(random_hermitian(n, rng));
        const auto split = constructions::odd_power_split(a, d);
        if (split.plus < 0.0 || split.minus < 0.0) ++r.failures;
        const double want = matkernel::power_trace(a, d).real();
        const double rel = std::abs((split.plus - split.minus) - want) / std::max(1.0, std::abs(want));
        record(r, rel, 1e-8);

        // A positive semidefinite matrix has no negative spectral mass.
        const Matrix g = random_matrix(n, rng);
        const HermitianMatrix psd(g.adjoint() * g);
        record(r, constructions::odd_power_split(psd, d).minus, 1e-9);
    }
    return r;
}

SuiteResult extension_suite(Seed seed, int cases) {
    SuiteResult r;
    r.name = "convex extension";
    CounterRng rng(seed);
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.next_u64() % 7;  // <= 8
        const int d = (rng.next_u64() % 2 == 0) ? 2 : 4;
        const HermitianMatrix a(random_hermitian(n, rng));
        const double ra = matkernel::schatten_norm(a, 2.0 * (d - 1));
        const double f_a = matkernel::power_trace(a, d).real();
        const Seed support{rng.next_u64()};

        // Lower bound everywhere, for radii putting A inside and outside.
        for (double factor : {0.5, 2.0}) {
            const constructions::TruncationSpec trunc(factor * ra, d);
            const double lb = constructions::convex_extension_lb(trunc, a, 32, support);
            record(r, lb - f_a, 1e-8);
        }

        // Exact on the interior (the projection point is A itself).
        {
            const constructions::TruncationSpec trunc(2.0 * ra, d);
            const double lb = constructions::convex_extension_lb(trunc, a, 8, support);
            record(r, std::abs(lb - f_a), 1e-8);
        }

        // Monotone under nested radii with shared support points.
        {
            const constructions::TruncationSpec small(0.4 * ra, d);
            const constructions::TruncationSpec large(0.9 * ra, d);
            const double lb1 = constructions::convex_extension_lb(small, a, 32, support);
            const double lb2 = constructions::convex_extension_lb(large, a, 32, support);
            record(r, lb1 - lb2, 1e-12);
        }

        // Truncated Lipschitz estimate |tr A^d - tr B^d| <= d a^{d-1} ||A-B||_2.
        {
            const HermitianMatrix b(random_hermitian(n, rng));
            const double rb = matkernel::schatten_norm(b, 2.0 * (d - 1));
            const double radius = std::max(ra, rb) * 1.0000001;
            const constructions::TruncationSpec trunc(radius, d);
            const double lhs =
                std::abs(f_a - matkernel::power_trace(b, d).real());
            Matrix diff = a.get();
            diff -= b.get();
            const double rhs = trunc.lipschitz_constant() * diff.frobenius_norm();
            record(r, lhs - rhs * (1.0 + 1e-6), 1e-12);
        }
    }
    return r;
}

SuiteResult kernel_suite(Seed seed, int cases) {
    SuiteResult r;
    r.name = "kernel";
    CounterRng rng(seed);
    const double p_grid[] = {1.0, 1.5, 2.0, 3.0, 4.0, 8.0, matkernel::kSchattenInf};
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        const Matrix a = random_matrix(n, rng);

        // Schatten monotonicity in p.
        double prev = -1.0;
        for (double p : p_grid) {
            const double v = matkernel::schatten_norm(a, p);
            if (prev >= 0.0) record(r, v - prev, 1e-10);
            prev = v;
        }

        // Hoelder interpolation against the 2- and inf-norms.
        const double n2 = matkernel::schatten_norm(a, 2.0);
        const double ninf = matkernel::schatten_norm(a, matkernel::kSchattenInf);
        for (double p : {2.0, 3.0, 4.0, 6.0}) {
            const double lhs = matkernel::schatten_norm(a, p);
            const double rhs = std::pow(n2, 2.0 / p) * std::pow(ninf, 1.0 - 2.0 / p);
            record(r, lhs - rhs * (1.0 + 1e-10), 1e-12);
        }

        // The sorted-spectrum map is 1-Lipschitz in Hilbert-Schmidt norm.
        const Matrix ha = random_hermitian(n, rng);
        const Matrix hb = random_hermitian(n, rng);
        const auto ea = matkernel::herm_eigvals(HermitianMatrix(ha));
        const auto eb = matkernel::herm_eigvals(HermitianMatrix(hb));
        double dist2 = 0.0;
        for (std::size_t i = 0; i < ea.size(); ++i)
            dist2 += (ea[i] - eb[i]) * (ea[i] - eb[i]);
        Matrix diff = ha;
        diff -= hb;
        record(r, std::sqrt(dist2) - diff.frobenius_norm() * (1.0 + 1e-12), 1e-12);

        // Trace cyclicity on explicit products.
        const Matrix b = random_matrix(n, rng);
        const Matrix cm = random_matrix(n, rng);
        const Complex abc = (a * b * cm).trace();
        const Complex bca = (b * cm * a).trace();
        const Complex cab = (cm * a * b).trace();
        const double scale = std::max(1.0, std::abs(abc));
        record(r, std::abs(abc - bca) / scale, 1e-10);
        record(r, std::abs(abc - cab) / scale, 1e-10);

        // Finite differences of tr A^d against the gradient d A^{d-1}.
        const int d = 2 + static_cast<int>(rng.next_u64() % 4);
        const Matrix h = random_hermitian(n, rng);
        Matrix apow = ha;
        for (int k = 2; k < d; ++k) apow = apow * ha;
        const double grad = static_cast<double>(d) * matkernel::trace_product(apow, h).real();
        const double step = 1e-5;
        Matrix plus = ha, minus = ha;
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t u = 0; u < n; ++u) {
                plus(t, u) += step * h(t, u);
                minus(t, u) -= step * h(t, u);
            }
        const double fd = (matkernel::power_trace(plus, d).real() -
                           matkernel::power_trace(minus, d).real()) /
                          (2.0 * step);
        record(r, std::abs(fd - grad) / std::max(1.0, std::abs(grad)), 1e-5);
    }
    return r;
}

SuiteResult ensemble_suite(Seed seed) {
    SuiteResult r;
    r.name = "ensembles";
    CounterRng rng(seed);
    using ensembles::EnsembleSpec;
    using ensembles::Kind;

    for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
        const Matrix u = ensembles::haar_unitary(n, Seed{rng.next_u64()}, false, false);
        Matrix gram = u.adjoint() * u;
        gram -= Matrix::identity(n);
        record(r, gram.max_abs(), 1e-10);

        const Matrix o = ensembles::haar_unitary(n, Seed{rng.next_u64()}, false, true);
        double max_imag = 0.0;
        for (const Complex& z : o.entries()) max_imag = std::max(max_imag, std::abs(z.imag()));
        record(r, max_imag, 1e-15);
        gram = o.adjoint() * o;
        gram -= Matrix::identity(n);
        record(r, gram.max_abs(), 1e-10);
    }

    for (std::size_t n : {3u, 4u, 10u}) {
        const double real_radius = std::sqrt(n * (n + 1.0) / 2.0);
        const auto sr = ensembles::hs_sphere_sample(n, true, Seed{rng.next_u64()});
        record(r, std::abs(sr.get().frobenius_norm() - real_radius), 1e-10);
        const auto sc = ensembles::hs_sphere_sample(n, false, Seed{rng.next_u64()});
        record(r, std::abs(sc.get().frobenius_norm() - static_cast<double>(n)), 1e-10);
    }

    {
        const EnsembleSpec rad{Kind::wigner_rademacher, 1.0, 1.0};
        const Matrix x = ensembles::sample(rad, 12, Seed{rng.next_u64()});
        double worst = 0.0;
        for (const Complex& z : x.entries())
            worst = std::max(worst, std::abs(std::abs(z.real()) - 1.0) + std::abs(z.imag()));
        record(r, worst, 1e-15);
    }

    {
        const EnsembleSpec spec{Kind::wigner_gaussian_real, 1.0, 1.0};
        const Seed s{rng.next_u64()};
        const Matrix x1 = ensembles::sample(spec, 16, s);
        const Matrix x2 = ensembles::sample(spec, 16, s);
        record(r, (x1 == x2) ? 0.0 : 1.0, 0.5);
        const Matrix x3 = ensembles::sample(spec, 16, Seed{derive(s, 1)});
        record(r, (x1 == x3) ? 1.0 : 0.0, 0.5);
    }
    return r;
}

std::vector<SuiteResult> identities_suites(Seed seed, int cases) {
    std::vector<SuiteResult> out;
    out.push_back(polarization_suite(Seed{derive(seed, 1)}, cases));
    out.push_back(dilation_suite(Seed{derive(seed, 2)}, cases));
    out.push_back(fourier_suite(12));
    out.push_back(split_suite(Seed{derive(seed, 3)}, cases));
    out.push_back(extension_suite(Seed{derive(seed, 4)}, std::max(1, cases / 2)));
    return out;
}

}  // namespace nclab::verify
