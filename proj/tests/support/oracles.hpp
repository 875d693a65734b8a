// Test-only reference computations. Everything here is deliberately
// implemented on routes the library does not use: long-double arithmetic,
// reverse summation order, closed-form integer-shape identities, and the
// LDL^T inertia count, so that agreement with the implementation is
// evidence rather than tautology.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "prbh/rng.hpp"
#include "prbh/states.hpp"

namespace oracle {

// Capacity series in long double, summed from the far tail back to k = 0,
// with the log difference evaluated literally.
inline long double capacity(long double z) {
    if (z == 0.0L) return 1.0L;
    int top = 64;
    while (std::pow(z, top) * (top + 2.0L) * (top + 3.0L) > 1e-30L && top < 2000000) {
        top += 64;
    }
    long double sum = 0.0L;
    for (int k = top; k >= 0; --k) {
        sum += (long double)(k + 1) * (k + 2) * std::pow(z, (long double)k) *
               (std::log2((long double)(k + 2)) - std::log2((long double)(k + 1)));
    }
    const long double c = 1.0L - z;
    return c * c * c / 2.0L * sum;
}

// Cloner probability with the power built by repeated multiplication in
// long double.
inline long double cloner_probability(double z, int n) {
    const long double zl = z;
    const long double c = 1.0L - zl;
    long double zpow = 1.0L;
    for (int i = 1; i < n; ++i) {
        zpow *= zl;
    }
    return 0.5L * c * c * c * (long double)n * (n + 1.0L) * zpow;
}

// Composite Simpson quadrature.
template <typename F>
double simpson(F f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < intervals; i += 2) odd += f(a + i * h);
    for (int i = 2; i < intervals; i += 2) even += f(a + i * h);
    return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

// Regularized lower incomplete gamma for integer shape, via the Poisson
// partial sum: P(n, y) = 1 - e^{-y} sum_{i<n} y^i / i!.
inline double lower_gamma_int(int n, double y) {
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i < n; ++i) {
        term *= y / i;
        sum += term;
    }
    return 1.0 - std::exp(-y) * sum;
}

// Number of eigenvalues of a Hermitian tridiagonal matrix strictly below
// the shift (LDL^T inertia count).
inline int tridiag_count_below(const prbh::Matrix& m, double shift) {
    const Eigen::Index dim = m.rows();
    int count = 0;
    double d = m(0, 0).real() - shift;
    if (d < 0.0) ++count;
    for (Eigen::Index i = 1; i < dim; ++i) {
        const double off2 = std::norm(m(i, i - 1));
        double denom = d;
        if (denom == 0.0) denom = 1e-300;
        d = (m(i, i).real() - shift) - off2 / denom;
        if (d < 0.0) ++count;
    }
    return count;
}

// Full spectrum of a Hermitian tridiagonal matrix through Eigen's
// tridiagonal QL path, phase-reduced to a real symmetric problem.
inline Eigen::VectorXd tridiag_spectrum(const prbh::Matrix& m) {
    const Eigen::Index dim = m.rows();
    Eigen::VectorXd diag(dim);
    Eigen::VectorXd sub(dim > 0 ? dim - 1 : 0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        diag(i) = m(i, i).real();
        if (i + 1 < dim) sub(i) = std::abs(m(i + 1, i));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

// Deterministic haphazard unit vectors for property sweeps.
inline std::vector<prbh::BlochVector> random_bloch(int count, std::uint64_t seed) {
    std::vector<prbh::BlochVector> vs;
    vs.reserve(static_cast<std::size_t>(count));
    prbh::RngStream rng(seed, 4242);
    for (int i = 0; i < count; ++i) {
        const double nz = 1.0 - 2.0 * rng.uniform();
        const double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
        const double s = std::sqrt(std::max(0.0, 1.0 - nz * nz));
        vs.push_back(prbh::BlochVector::unit(s * std::cos(phi), s * std::sin(phi), nz));
    }
    return vs;
}

}  // namespace oracle
