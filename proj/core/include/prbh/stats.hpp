#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace prbh {

// Reading of the sigma^2 parameter in the Rayleigh magnitude law.
// total_power treats it as E|w|^2, the convention every sampler in this
// library follows (quadratures then carry variance sigma2/2 each, and
// |w|^2 is exponential with mean sigma2). per_component instead treats it
// as the variance of one quadrature, which rescales the exponent by a
// factor of two; it is kept purely as a comparison surface.
enum class RayleighConvention { total_power, per_component };

// One-sample goodness-of-fit target for the Kolmogorov-Smirnov statistic.
class FitModel {
public:
    enum class Kind { normal, rayleigh, exponential, gamma, chi_square };

    static FitModel normal(double mean, double variance);
    static FitModel rayleigh(double sigma2,
                             RayleighConvention conv = RayleighConvention::total_power);
    static FitModel exponential(double mean);
    static FitModel gamma(int shape, double scale);
    static FitModel chi_square(int dof);

    double cdf(double x) const;
    Kind kind() const { return kind_; }
    std::string name() const;

private:
    FitModel(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    double a_;  // mean / sigma2 / shape, depending on kind
    double b_;  // variance / scale, depending on kind
};

// sup_x |F_emp(x) - F_model(x)| over the sample. Requires >= 100 samples;
// invariant under permutation of the input (it sorts a copy).
double ks_statistic(std::span<const double> samples, const FitModel& model);

// Asymptotic critical value c(alpha)/sqrt(n) with
// c(alpha) = sqrt(-ln(alpha/2)/2); the test at level alpha rejects when the
// statistic exceeds this.
double ks_critical_value(std::size_t n, double alpha);

// Regularized lower incomplete gamma P(a, x); series for x < a+1,
// continued fraction otherwise.
double regularized_lower_gamma(double a, double x);

}  // namespace prbh
