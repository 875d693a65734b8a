#include "prbh/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace prbh {

FitModel FitModel::normal(double mean, double variance) {
    if (!(variance > 0.0)) {
        throw std::invalid_argument("normal variance must be positive");
    }
    return FitModel(Kind::normal, mean, variance);
}

FitModel FitModel::rayleigh(double sigma2, RayleighConvention conv) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("rayleigh sigma2 must be positive");
    }
    return FitModel(Kind::rayleigh, sigma2,
                    conv == RayleighConvention::per_component ? 1.0 : 0.0);
}

FitModel FitModel::exponential(double mean) {
    if (!(mean > 0.0)) {
        throw std::invalid_argument("exponential mean must be positive");
    }
    return FitModel(Kind::exponential, mean, 0.0);
}

FitModel FitModel::gamma(int shape, double scale) {
    if (shape < 1 || !(scale > 0.0)) {
        throw std::invalid_argument("gamma shape must be >= 1 and scale positive");
    }
    return FitModel(Kind::gamma, static_cast<double>(shape), scale);
}

FitModel FitModel::chi_square(int dof) {
    if (dof < 1) {
        throw std::invalid_argument("chi-square dof must be >= 1");
    }
    return FitModel(Kind::chi_square, static_cast<double>(dof), 0.0);
}

double FitModel::cdf(double x) const {
    switch (kind_) {
        case Kind::normal:
            return 0.5 * std::erfc(-(x - a_) / std::sqrt(2.0 * b_));
        case Kind::rayleigh:
            // magnitude law of a complex Gaussian; b_ != 0 selects the
            // per-component reading of sigma2
            if (x <= 0.0) return 0.0;
            return b_ != 0.0 ? -std::expm1(-0.5 * x * x / a_)
                             : -std::expm1(-x * x / a_);
        case Kind::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-x / a_);
        case Kind::gamma:
            return x <= 0.0 ? 0.0 : regularized_lower_gamma(a_, x / b_);
        case Kind::chi_square:
            return x <= 0.0 ? 0.0 : regularized_lower_gamma(0.5 * a_, 0.5 * x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string FitModel::name() const {
    switch (kind_) {
        case Kind::normal: return "normal";
        case Kind::rayleigh: return "rayleigh";
        case Kind::exponential: return "exponential";
        case Kind::gamma: return "gamma";
        case Kind::chi_square: return "chi_square";
    }
    return "?";
}

double ks_statistic(std::span<const double> samples, const FitModel& model) {
    if (samples.size() < 100) {
        throw std::invalid_argument("KS statistic needs at least 100 samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = model.cdf(sorted[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = std::max({d, lo, hi});
    }
    return d;
}

double ks_critical_value(std::size_t n, double alpha) {
    if (n == 0) {
        throw std::invalid_argument("sample size must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("significance level must lie in (0, 1)");
    }
    return std::sqrt(-0.5 * std::log(0.5 * alpha) / static_cast<double>(n));
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::invalid_argument("regularized_lower_gamma needs a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    constexpr int max_iter = 500;
    constexpr double eps = 1e-16;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // series expansion of P(a, x)
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int i = 0; i < max_iter; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * eps) {
                break;
            }
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz continued fraction for Q(a, x)
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_iter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) {
            break;
        }
    }
    const double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

}  // namespace prbh
