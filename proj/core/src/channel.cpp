#include "prbh/channel.hpp"

#include <cmath>
#include <numbers>

#include "prbh/summation.hpp"

namespace prbh {

MassIndicator::MassIndicator(double z) : z_(z) {
    if (!std::isfinite(z) || z < 0.0 || z >= 1.0) {
        throw std::invalid_argument("mass indicator must satisfy 0 <= z < 1");
    }
}

double cloner_probability(MassIndicator z, int n) {
    if (n < 1) {
        throw std::invalid_argument("cloner index N must be >= 1");
    }
    const double zv = z.value();
    const double c = 1.0 - zv;
    const double cube = (c * c) * c;
    if (zv == 0.0) {
        // Point mass on the noiseless 1->1 realization; avoids pow(0, 0).
        return n == 1 ? cube : 0.0;
    }
    // The leading 0.5 * N(N+1) factor is exactly 1 at N = 1, so p_1 comes
    // out bit-identical to (1-z)^3.
    return 0.5 * cube * (static_cast<double>(n) * (n + 1.0)) * std::pow(zv, n - 1);
}

ClonerDistribution build_distribution(MassIndicator z, double tail_tol, int term_cap) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
        throw std::invalid_argument("tail tolerance must lie in (0, 1)");
    }
    if (z.value() == 0.0) {
        return ClonerDistribution{z, 1, {1.0}, 0.0};
    }
    std::vector<double> probs;
    KahanAccumulator sum;
    for (int n = 1; n <= term_cap; ++n) {
        const double p = cloner_probability(z, n);
        probs.push_back(p);
        sum.add(p);
        const double tail = std::max(0.0, 1.0 - sum.value());
        if (tail <= tail_tol) {
            return ClonerDistribution{z, n, std::move(probs), tail};
        }
    }
    throw TruncationCapError("truncation cap exceeded");
}

CapacityResult quantum_capacity_detailed(MassIndicator z, double tail_tol, int term_cap) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
        throw std::invalid_argument("tail tolerance must lie in (0, 1)");
    }
    const double zv = z.value();
    if (zv == 0.0) {
        return CapacityResult{1.0, 1, 0.0};  // only the k = 0 term survives
    }
    constexpr double inv_ln2 = 1.0 / std::numbers::ln2;
    const double c = 1.0 - zv;
    const double cube = (c * c) * c;
    KahanAccumulator sum;
    double zpow = 1.0;  // z^k
    for (int k = 0; k < term_cap; ++k) {
        // (k+1)(k+2) z^k log2(1 + 1/(k+1)), with log1p to dodge the
        // cancellation in log2(k+2) - log2(k+1) at large k.
        const double term =
            (k + 1.0) * (k + 2.0) * zpow * std::log1p(1.0 / (k + 1.0)) * inv_ln2;
        sum.add(term);
        zpow *= zv;
        // log2(1 + 1/(m+1)) <= 1/((m+1) ln 2) bounds every remaining term by
        // (1-z)^3/(2 ln 2) (m+2) z^m, whose sum over m > k has a closed form.
        const double bound =
            0.5 * cube * inv_ln2 * zpow * ((k + 3.0) / c + zv / (c * c));
        if (bound <= tail_tol) {
            return CapacityResult{0.5 * cube * sum.value(), k + 1, bound};
        }
    }
    throw TruncationCapError("truncation cap exceeded");
}

double quantum_capacity(MassIndicator z, double tail_tol) {
    return quantum_capacity_detailed(z, tail_tol).value;
}

}  // namespace prbh
