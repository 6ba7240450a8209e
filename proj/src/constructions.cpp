// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "nclab/ensembles.hpp"

namespace nclab::constructions {

namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix matrix_power(const Matrix& a, int d) {
    Matrix p = a;
    for (int i = 1; i < d; ++i) p = p * a;
    return p;
}

}  // namespace

Complex root_of_unity(long j, long k) {
    j %= k;
    if (j < 0) j += k;
    // Quarter-turn multiples come out exact.
    if (4 * j % k == 0) {
        switch (4 * j / k) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(k);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<PolarizationTerm> polarization_terms(const Matrix& a, int d) {
    if (!a.is_square()) throw std::invalid_argument("polarization_terms: matrix must be square");
    if (d < 1) throw std::invalid_argument("polarization_terms: degree must be >= 1");
    const std::size_t n = a.rows();
    const Matrix astar = a.adjoint();

    std::vector<PolarizationTerm> terms;
    terms.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        // theta_j = pi j/(d+1); e^{+-i theta_j} are 2(d+1)-th roots of unity.
        const Complex ep = root_of_unity(j, 2L * (d + 1));
        const Complex em = std::conj(ep);
        Matrix y(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) y(r, c) = em * a(r, c) + ep * astar(r, c);
        // phase_j = e^{i pi j d/(d+1)}
        const Complex phase = root_of_unity(static_cast<long>(j) * d, 2L * (d + 1));
        terms.push_back(PolarizationTerm{phase, HermitianMatrix(std::move(y))});
    }
    return terms;
}

double polarization_residual(const Matrix& a, int d) {
    const auto terms = polarization_terms(a, d);
    const Matrix ad = matrix_power(a, d);
    Matrix acc(a.rows(), a.cols());
    for (const PolarizationTerm& t : terms) {
        Matrix p = matrix_power(t.y.get(), d);
        p *= t.phase;
        acc += p;
    }
    acc *= Complex{1.0 / static_cast<double>(d + 1), 0.0};
    acc -= ad;
    return acc.max_abs();
}

double polarize_pair(const Matrix& a, const Matrix& b, int d) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("polarize_pair: matrices must be square and of equal size");
    if (d < 1) throw std::invalid_argument("polarize_pair: degree must be >= 1");
    const std::size_t n = a.rows();
    const Matrix ad = matrix_power(a, d);

    // Summing the per-term differences (A + w^j B)^d - A^d keeps the residual
    // exactly zero when B = 0: each bracket is then identically A^d - A^d.
    Matrix acc(n, n);
    for (int j = 0; j <= d; ++j) {
        const Complex w = root_of_unity(j, d + 1);
        Matrix s(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) s(r, c) = a(r, c) + w * b(r, c);
        Matrix bracket = matrix_power(s, d);
        bracket -= ad;
        acc += bracket;
    }
    acc *= Complex{1.0 / static_cast<double>(d + 1), 0.0};
    const double scale = std::max(1.0, std::pow(matkernel::operator_norm(a) +
                                                    matkernel::operator_norm(b),
                                                static_cast<double>(d)));
    return acc.max_abs() / scale;
}

Matrix cyclic_dilation(std::span<const Matrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("cyclic_dilation: empty block list");
    const std::size_t d = blocks.size();
    const std::size_t n = blocks[0].rows();
    for (const Matrix& y : blocks)
        if (!y.is_square() || y.rows() != n)
            throw std::invalid_argument("cyclic_dilation: blocks must be square and of equal size");

    Matrix x(d * n, d * n);
    for (std::size_t k = 0; k < d; ++k) {
        // Block row k holds Y_{k+1}; the last block wraps to column 0.
        const std::size_t col = (k + 1 < d) ? k + 1 : 0;
        const Matrix& y = blocks[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(k * n + i, col * n + j) = y(i, j);
    }
    return x;
}

Matrix fourier_matrix(int k) {
    if (k < 2) throw std::invalid_argument("fourier_matrix: size must be >= 2");
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(k));
    Matrix f(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l)
            f(static_cast<std::size_t>(j), static_cast<std::size_t>(l)) =
                root_of_unity(static_cast<long>(j) * l, k) * inv_sqrt;
    return f;
}

OddPowerSplit odd_power_split(const HermitianMatrix& a, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("odd_power_split: degree must be odd");
    const std::vector<double> eig = matkernel::herm_eigvals(a);
    OddPowerSplit out{0.0, 0.0};
    for (double lam : eig) {
        if (lam > 0.0)
            out.plus += std::pow(lam, static_cast<double>(d));
        else if (lam < 0.0)
            out.minus += std::pow(-lam, static_cast<double>(d));
    }
    return out;
}

TruncationSpec::TruncationSpec(double a, int d) : radius(a), degree(d) {
    if (!(radius > 0.0)) throw std::invalid_argument("TruncationSpec: radius must be positive");
    if (degree < 2) throw std::invalid_argument("TruncationSpec: degree must be >= 2");
}

double TruncationSpec::lipschitz_constant() const {
    return degree * std::pow(radius, static_cast<double>(degree - 1));
}

namespace {

// Supporting-hyperplane value of F(Y) = tr Y^d at Y = s W, evaluated at A:
//   F(Y) + <grad F(Y), A - Y> = d s^{d-1} tr(W^{d-1} A) - (d-1) s^d tr W^d.
double support_value(double s, int d, double alpha, double beta) {
    const double sd1 = std::pow(s, static_cast<double>(d - 1));
    return d * sd1 * alpha - (d - 1) * sd1 * s * beta;
}

}  // namespace

double convex_extension_lb(const TruncationSpec& trunc, const HermitianMatrix& a,
                           int support_count, Seed seed) {
    const int d = trunc.degree;
    if (d % 2 != 0)
        throw std::invalid_argument(
            "convex_extension_lb: degree must be even (split odd powers first)");
    if (support_count < 1)
        throw std::invalid_argument("convex_extension_lb: support_count must be >= 1");
    const std::size_t n = a.size();
    const double p = 2.0 * (d - 1);
    const double inner_radius = trunc.radius * (1.0 - 1e-9);

    // Radial projection of the query point onto the (slightly shrunken) ball;
    // when A already lies inside, this is A itself and the bound is exact.
    double best;
    {
        const double ra = matkernel::schatten_norm(a, p);
        const double shrink = (ra > inner_radius) ? inner_radius / ra : 1.0;
        const double alpha = shrink == 1.0
                                 ? matkernel::power_trace(a, d).real()
                                 : std::pow(shrink, static_cast<double>(d - 1)) *
                                       matkernel::power_trace(a, d).real();
        // With W = shrink * A and s = 1: alpha = tr(W^{d-1} A), beta = tr W^d.
        const double beta = shrink * alpha;
        best = support_value(1.0, d, alpha, beta);
    }

    // Sampled rays: Gaussian Hermitian directions, each explored up to a
    // uniformly drawn fraction of the ball radius. Along a ray Y = s W the
    // support value is maximized in closed form, so the bound is monotone in
    // the radius for a fixed seed.
    const ensembles::EnsembleSpec direction{ensembles::Kind::wigner_gaussian_complex, 1.0, 1.0};
    for (int i = 0; i < support_count; ++i) {
        const Seed ray_seed{derive(seed, static_cast<std::uint64_t>(i))};
        Matrix w = ensembles::sample(direction, n, ray_seed);
        const double wn = matkernel::schatten_norm(w, p);
        if (wn == 0.0) continue;
        w *= Complex{1.0 / wn, 0.0};

        CounterRng aux(derive(ray_seed, 0x5Cu));
        const double smax = aux.next_unit() * inner_radius;
        if (smax <= 0.0) continue;

        Matrix wpow = matrix_power(w, d - 1);
        const double alpha = matkernel::trace_product(wpow, a.get()).real();
        if (alpha <= 0.0) continue;  // the origin already dominates this ray
        const double beta = matkernel::trace_product(wpow, w).real();
        const double s = (beta > 0.0) ? std::min(alpha / beta, smax) : smax;
        best = std::max(best, support_value(s, d, alpha, beta));
    }
    return best;
}

}  // namespace nclab::constructions
