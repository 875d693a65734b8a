#include "prbh/fading.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "prbh/summation.hpp"

namespace prbh {

ComplexSample sample_phasor_sum(int j, double sigma2, RngStream& rng) {
    if (j < 1) {
        throw std::invalid_argument("phasor count j must be >= 1");
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("sigma2 must be positive");
    }
    const double r = std::sqrt(sigma2 / j);
    double re = 0.0;
    double im = 0.0;
    for (int i = 0; i < j; ++i) {
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        re += r * std::cos(phi);
        im += r * std::sin(phi);
    }
    return ComplexSample(re, im);
}

ComplexSample sample_complex_gaussian(double sigma2, RngStream& rng) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("sigma2 must be positive");
    }
    const auto [g0, g1] = rng.normal_pair();
    const double s = std::sqrt(0.5 * sigma2);
    return ComplexSample(s * g0, s * g1);
}

double rayleigh_pdf(double x, double sigma2, RayleighConvention conv) {
    if (x < 0.0) {
        throw std::invalid_argument("rayleigh_pdf argument must be >= 0");
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("sigma2 must be positive");
    }
    switch (conv) {
        case RayleighConvention::total_power:
            return (2.0 * x / sigma2) * std::exp(-x * x / sigma2);
        case RayleighConvention::per_component:
            return (x / sigma2) * std::exp(-0.5 * x * x / sigma2);
    }
    throw std::invalid_argument("unknown rayleigh convention");
}

double exponential_pdf(double x, double sigma2) {
    if (x < 0.0) {
        throw std::invalid_argument("exponential_pdf argument must be >= 0");
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("sigma2 must be positive");
    }
    return std::exp(-x / sigma2) / sigma2;
}

std::vector<double> draw_unscaled_gammas(int n, double sigma2, RngStream& rng) {
    if (n < 1) {
        throw std::invalid_argument("coefficient count N must be >= 1");
    }
    std::vector<double> gammas(static_cast<std::size_t>(n));
    for (auto& g : gammas) {
        g = std::norm(sample_complex_gaussian(sigma2, rng));
    }
    return gammas;
}

CoefficientVector build_coefficient_vector(double p_target, int n, double sigma2,
                                           RngStream& rng) {
    if (!(p_target > 0.0 && p_target <= 1.0)) {
        throw std::invalid_argument("target probability must lie in (0, 1]");
    }
    auto draws = draw_unscaled_gammas(n, sigma2, rng);
    KahanAccumulator sum;
    for (double g : draws) {
        sum.add(g);
    }
    if (!(sum.value() > 0.0)) {
        draws = draw_unscaled_gammas(n, sigma2, rng);  // one retry
        sum = {};
        for (double g : draws) {
            sum.add(g);
        }
        if (!(sum.value() > 0.0)) {
            throw std::runtime_error("degenerate all-zero coefficient draw");
        }
    }

    CoefficientVector cv;
    cv.n = n;
    cv.target_p = p_target;
    if (n == 1) {
        cv.gammas = {p_target};  // rescaling a single draw is exact
    } else {
        const double scale = p_target / sum.value();
        cv.gammas.resize(draws.size());
        for (std::size_t i = 0; i < draws.size(); ++i) {
            cv.gammas[i] = draws[i] * scale;
        }
    }
    KahanAccumulator roots;
    for (double g : cv.gammas) {
        roots.add(std::sqrt(g));
    }
    cv.tau = roots.value() / std::sqrt(p_target);
    return cv;
}

double total_probability_check(MassIndicator z, double tail_tol, double sigma2,
                               RngStream& rng) {
    const ClonerDistribution dist = build_distribution(z, tail_tol);
    KahanAccumulator total;
    for (int n = 1; n <= dist.n_max; ++n) {
        const auto cv = build_coefficient_vector(
            dist.probs[static_cast<std::size_t>(n - 1)], n, sigma2, rng);
        KahanAccumulator inner;
        for (double g : cv.gammas) {
            inner.add(g);
        }
        total.add(inner.value());
    }
    return total.value();
}

SampleBatch make_batch(std::vector<double> values, FitModel model, double sigma2) {
    const double ks = ks_statistic(values, model);
    return SampleBatch{std::move(values), std::move(model), sigma2, ks};
}

}  // namespace prbh
