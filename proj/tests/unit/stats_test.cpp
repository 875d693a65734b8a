#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "prbh/fading.hpp"
#include "prbh/rng.hpp"
#include "prbh/stats.hpp"
#include "support/oracles.hpp"

using prbh::FitModel;

TEST_CASE("ks statistic basics") {
    // samples placed at the model quantiles give a statistic of ~1/(2n)
    std::vector<double> q;
    const auto model = FitModel::exponential(1.0);
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) / n;
        q.push_back(-std::log1p(-u));
    }
    const double d = prbh::ks_statistic(q, model);
    CHECK(d <= 1.0 / n + 1e-12);
    CHECK(d >= 0.0);

    // permutation invariance
    std::vector<double> shuffled = q;
    std::mt19937 rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(prbh::ks_statistic(shuffled, model) == d);

    std::vector<double> tiny(50, 0.5);
    CHECK_THROWS_AS(prbh::ks_statistic(tiny, model), std::invalid_argument);
}

TEST_CASE("ks critical value formula") {
    CHECK(prbh::ks_critical_value(100000, 0.01) ==
          doctest::Approx(std::sqrt(-0.5 * std::log(0.005)) / std::sqrt(100000.0))
              .epsilon(1e-15));
    CHECK_THROWS_AS(prbh::ks_critical_value(0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(prbh::ks_critical_value(100, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(prbh::ks_critical_value(100, 1.0), std::invalid_argument);
}

TEST_CASE("regularized lower incomplete gamma vs integer closed form") {
    for (int a = 1; a <= 10; ++a) {
        for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 20.0, 50.0}) {
            const double got = prbh::regularized_lower_gamma(a, x);
            const double want = oracle::lower_gamma_int(a, x);
            CHECK(std::abs(got - want) <= 1e-13);
        }
    }
    CHECK(prbh::regularized_lower_gamma(3.5, 0.0) == 0.0);
    CHECK_THROWS_AS(prbh::regularized_lower_gamma(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(prbh::regularized_lower_gamma(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("fit model cdfs") {
    CHECK(FitModel::normal(0.0, 1.0).cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(FitModel::normal(2.0, 4.0).cdf(2.0) == doctest::Approx(0.5).epsilon(1e-15));
    // rayleigh under the total-power reading: median at sqrt(sigma2 ln 2)
    CHECK(FitModel::rayleigh(1.0).cdf(std::sqrt(std::log(2.0))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // per-component reading doubles the scale inside the exponent
    CHECK(FitModel::rayleigh(0.5, prbh::RayleighConvention::per_component).cdf(1.0) ==
          doctest::Approx(FitModel::rayleigh(1.0).cdf(1.0)).epsilon(1e-14));
    CHECK(FitModel::exponential(2.0).cdf(2.0 * std::log(2.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // gamma(1, theta) is the exponential
    for (double x : {0.1, 1.0, 3.0}) {
        CHECK(FitModel::gamma(1, 2.0).cdf(x) ==
              doctest::Approx(FitModel::exponential(2.0).cdf(x)).epsilon(1e-13));
        CHECK(FitModel::chi_square(6).cdf(x) ==
              doctest::Approx(FitModel::gamma(3, 2.0).cdf(x)).epsilon(1e-13));
    }
    CHECK(FitModel::rayleigh(1.0).cdf(-1.0) == 0.0);
    CHECK_THROWS_AS(FitModel::normal(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FitModel::gamma(0, 1.0), std::invalid_argument);
}

TEST_CASE("ks self-consistency: true-model batches pass at alpha = 0.01") {
    // with data drawn from the model itself the test should accept in at
    // least 95 of 100 repetitions
    const auto model = FitModel::exponential(1.0);
    int accepted = 0;
    for (int rep = 0; rep < 100; ++rep) {
        prbh::RngStream rng(2024, static_cast<std::uint64_t>(rep));
        std::vector<double> xs(100000);
        for (auto& x : xs) {
            x = std::norm(prbh::sample_complex_gaussian(1.0, rng));
        }
        const double d = prbh::ks_statistic(xs, model);
        if (d < prbh::ks_critical_value(xs.size(), 0.01)) ++accepted;
    }
    CHECK(accepted >= 95);
}

TEST_CASE("ks rejects a shifted model") {
    prbh::RngStream rng(99, 0);
    std::vector<double> xs(10000);
    for (auto& x : xs) {
        x = std::norm(prbh::sample_complex_gaussian(1.0, rng)) + 0.5;
    }
    const double d = prbh::ks_statistic(xs, FitModel::exponential(1.0));
    CHECK(d > prbh::ks_critical_value(xs.size(), 0.01));
}
