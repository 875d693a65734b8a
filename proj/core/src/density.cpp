#include "prbh/density.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "prbh/stats.hpp"
#include "prbh/summation.hpp"

namespace prbh {

namespace {

// Exact in double for n <= 18; the callers here never need more than the
// rounding tgamma would give anyway.
double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

double f_density(double z, int n, double rate) {
    if (z < 0.0) {
        throw std::invalid_argument("density argument z must be >= 0");
    }
    if (n < 1) {
        throw std::invalid_argument("index N must be >= 1");
    }
    if (!(rate > 0.0)) {
        throw std::invalid_argument("rate must be positive");
    }
    if (n > 140) {
        // log form dodges factorial overflow
        if (z == 0.0) {
            return 0.0;
        }
        return std::exp((n - 1) * std::log(rate * z) - rate * z -
                        std::lgamma(static_cast<double>(n)));
    }
    return std::pow(rate * z, n - 1) * std::exp(-rate * z) / std::tgamma(static_cast<double>(n));
}

double chi_square_pdf(double x, int dof) {
    if (x < 0.0) {
        throw std::invalid_argument("chi-square argument must be >= 0");
    }
    if (dof < 2 || dof % 2 != 0) {
        throw std::invalid_argument("degrees of freedom must be a positive even integer");
    }
    const int m = dof / 2;
    return 0.5 * std::pow(0.5 * x, m - 1) * std::exp(-0.5 * x) /
           std::tgamma(static_cast<double>(m));
}

double cdf_small_y(double y, int n) {
    if (y < 0.0) {
        throw std::invalid_argument("cdf argument must be >= 0");
    }
    if (n < 1) {
        throw std::invalid_argument("index N must be >= 1");
    }
    return std::pow(y, n) / factorial(n);
}

double cdf_exact(double y, int n) {
    if (y < 0.0) {
        throw std::invalid_argument("cdf argument must be >= 0");
    }
    if (n < 1) {
        throw std::invalid_argument("index N must be >= 1");
    }
    return regularized_lower_gamma(static_cast<double>(n), y);
}

DensityCurve density_curve(int n, int z_steps, double rate) {
    if (n < 1) {
        throw std::invalid_argument("index N must be >= 1");
    }
    if (z_steps < 2) {
        throw std::invalid_argument("curve needs at least 2 grid points");
    }
    DensityCurve curve;
    curve.n = n;
    curve.rate = rate;
    curve.z.reserve(static_cast<std::size_t>(z_steps));
    curve.f.reserve(static_cast<std::size_t>(z_steps));
    const double h = 1.0 / z_steps;
    for (int i = 0; i < z_steps; ++i) {
        const double z = i * h;
        curve.z.push_back(z);
        curve.f.push_back(f_density(z, n, rate));
    }
    return curve;
}

namespace {

double trapezoid_mass(const std::vector<double>& values, double h) {
    KahanAccumulator sum;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        sum.add(0.5 * h * (values[i] + values[i + 1]));
    }
    return sum.value();
}

}  // namespace

double fit_distance(int n, int z_steps, double rate) {
    if (n < 1) {
        throw std::invalid_argument("index N must be >= 1");
    }
    if (z_steps < 2) {
        throw std::invalid_argument("grid needs at least 2 points");
    }
    const double h = 1.0 / z_steps;
    std::vector<double> exact(static_cast<std::size_t>(z_steps));
    std::vector<double> approx(static_cast<std::size_t>(z_steps));
    for (int i = 0; i < z_steps; ++i) {
        const double z = i * h;
        exact[static_cast<std::size_t>(i)] = cloner_probability(MassIndicator(z), n);
        approx[static_cast<std::size_t>(i)] = f_density(z, n, rate);
    }
    const double exact_mass = trapezoid_mass(exact, h);
    const double approx_mass = trapezoid_mass(approx, h);
    if (!(exact_mass > 0.0) || !(approx_mass > 0.0)) {
        throw std::runtime_error("degenerate curve mass in fit_distance");
    }
    std::vector<double> gap(static_cast<std::size_t>(z_steps));
    for (std::size_t i = 0; i < gap.size(); ++i) {
        gap[i] = std::abs(exact[i] / exact_mass - approx[i] / approx_mass);
    }
    return trapezoid_mass(gap, h);
}

}  // namespace prbh
