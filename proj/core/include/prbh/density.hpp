#pragma once

#include <vector>

#include "prbh/channel.hpp"

namespace prbh {

// Rate constant of the closed-form density approximation. Exposed for
// sensitivity studies; all identities below are stated at the default.
inline constexpr double kDefaultDensityRate = 10.0;

// Sampled density curve over a uniform z grid in [0, 1).
struct DensityCurve {
    int n = 0;
    double rate = kDefaultDensityRate;
    std::vector<double> z;  // strictly increasing
    std::vector<double> f;  // all >= 0
};

// f_N(z) = (rate z)^(N-1) exp(-rate z) / (N-1)!. Not a normalized pdf in z:
// it integrates to 1/rate over [0, inf). Mode at (N-1)/rate for N >= 2.
double f_density(double z, int n, double rate = kDefaultDensityRate);

// Standard chi-square density; dof must be a positive even integer here
// because the model only ever produces 2N degrees of freedom. Satisfies
// f_density(z, N) == 2 chi_square_pdf(20 z, 2N) at the default rate.
double chi_square_pdf(double x, int dof);

// Literal small-argument CDF y^N / N!, the e^{-x} ~ 1 regime of the exact
// law. Pair with cdf_exact to quantify the approximation.
double cdf_small_y(double y, int n);

// Exact counterpart: regularized lower incomplete gamma P(N, y).
double cdf_exact(double y, int n);

DensityCurve density_curve(int n, int z_steps, double rate = kDefaultDensityRate);

// L1 gap on the uniform z grid between the grid-normalized exact curve
// z -> p_N(z) and the grid-normalized f_N curve (trapezoid quadrature).
// Reported, not asserted: there is no stated tolerance for the
// approximation.
double fit_distance(int n, int z_steps, double rate = kDefaultDensityRate);

}  // namespace prbh
