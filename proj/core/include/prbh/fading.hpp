#pragma once

#include <complex>
#include <vector>

#include "prbh/channel.hpp"
#include "prbh/rng.hpp"
#include "prbh/stats.hpp"

namespace prbh {

using ComplexSample = std::complex<double>;

// Sum of j independent phasors with uniform phase and fixed magnitude
// sqrt(sigma2/j), so the total second moment is sigma2 for every j. The sum
// converges to a circular-symmetric complex Gaussian as j grows.
ComplexSample sample_phasor_sum(int j, double sigma2, RngStream& rng);

// Circular-symmetric complex Gaussian with E|w|^2 = sigma2: independent
// zero-mean quadratures of variance sigma2/2 each.
ComplexSample sample_complex_gaussian(double sigma2, RngStream& rng);

double rayleigh_pdf(double x, double sigma2,
                    RayleighConvention conv = RayleighConvention::total_power);

// Density of |w|^2: (1/sigma2) exp(-x/sigma2).
double exponential_pdf(double x, double sigma2);

// Decomposition of one cloner probability into squared Rayleigh magnitudes:
// Gamma_i >= 0 with sum Gamma_i = target_p, and the normalization term
// tau = sum(sqrt(Gamma_i)) / sqrt(target_p).
struct CoefficientVector {
    int n = 0;
    std::vector<double> gammas;
    double tau = 0.0;
    double target_p = 0.0;
};

// N independent |w_i|^2 draws (exponential with mean sigma2), unscaled.
std::vector<double> draw_unscaled_gammas(int n, double sigma2, RngStream& rng);

// Draw-then-rescale realization of the fixed-sum ensemble: the unscaled
// draws follow the exponential law; the rescaled ones satisfy the sum
// identity. A degenerate all-zero draw is retried once, then rejected.
CoefficientVector build_coefficient_vector(double p_target, int n, double sigma2,
                                           RngStream& rng);

// Builds one coefficient vector per retained cloner index and returns the
// grand sum of all Gamma_i, which the rescaling pins to 1 - tail_mass
// regardless of the stream.
double total_probability_check(MassIndicator z, double tail_tol, double sigma2,
                               RngStream& rng);

// A batch of scalar draws together with the model it is tested against.
struct SampleBatch {
    std::vector<double> values;
    FitModel model;
    double sigma2 = 0.0;
    double ks_statistic = 0.0;
};

// Computes the KS statistic of values against model and packages the batch.
SampleBatch make_batch(std::vector<double> values, FitModel model, double sigma2);

}  // namespace prbh
