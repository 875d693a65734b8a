#include <doctest.h>

#include <cmath>
#include <vector>

#include "prbh/rng.hpp"

TEST_CASE("streams are reproducible and distinct") {
    prbh::RngStream a(42, 3);
    prbh::RngStream b(42, 3);
    prbh::RngStream c(42, 4);
    prbh::RngStream d(43, 3);
    bool same = true, differs_stream = false, differs_seed = false;
    for (int i = 0; i < 1000; ++i) {
        const auto va = a.next_u64();
        same = same && va == b.next_u64();
        differs_stream = differs_stream || va != c.next_u64();
        differs_seed = differs_seed || va != d.next_u64();
    }
    CHECK(same);
    CHECK(differs_stream);
    CHECK(differs_seed);
}

TEST_CASE("uniform ranges") {
    prbh::RngStream rng(1, 0);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo < 0.001);
    CHECK(hi > 0.999);
    // mean 1/2 within 4 standard errors of a uniform
    CHECK(std::abs(sum / n - 0.5) <= 4.0 / std::sqrt(12.0 * n));

    prbh::RngStream rng2(1, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng2.uniform_positive();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("normal pairs have the right moments") {
    prbh::RngStream rng(7, 0);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [x, y] = rng.normal_pair();
        sum += x + y;
        sumsq += x * x + y * y;
        cross += x * y;
    }
    const double mean = sum / (2.0 * n);
    const double var = sumsq / (2.0 * n);
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(2.0 * n));
    CHECK(std::abs(var - 1.0) <= 5.0 * std::sqrt(2.0 / (2.0 * n)));
    CHECK(std::abs(cross / n) <= 5.0 / std::sqrt(static_cast<double>(n)));
}
