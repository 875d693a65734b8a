#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prbh {

// Thrown when a truncated series cannot reach the requested tail tolerance
// within the configured term cap.
class TruncationCapError : public std::runtime_error {
public:
    explicit TruncationCapError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultTermCap = 100000;

// Normalized bare-mass parameter z of the reflecting-channel model.
// Construction rejects anything outside 0 <= z < 1.
class MassIndicator {
public:
    explicit MassIndicator(double z);
    double value() const { return z_; }

private:
    double z_;
};

// Truncated cloner-number distribution {p_N}, N = 1..n_max, plus the
// certified probability mass of everything beyond n_max.
struct ClonerDistribution {
    MassIndicator z;
    int n_max = 0;
    std::vector<double> probs;  // probs[N-1] == p_N
    double tail_mass = 0.0;
};

// p_N(z) = 1/2 (1-z)^3 N(N+1) z^(N-1): the weight of the 1->N cloner in the
// convex-sum channel. Normalizes to 1 over N >= 1 by the geometric-series
// identity sum N(N+1) z^(N-1) = 2/(1-z)^3, and reduces to (1-z)^3 at N = 1.
double cloner_probability(MassIndicator z, int n);

// Smallest truncation whose analytic remainder is <= tail_tol. The total
// mass is exactly 1, so the remainder is the complement of the partial sum.
ClonerDistribution build_distribution(MassIndicator z, double tail_tol,
                                      int term_cap = kDefaultTermCap);

struct CapacityResult {
    double value = 0.0;
    int n_terms = 0;
    double tail_bound = 0.0;
};

// Quantum capacity of the channel,
//   Q = ((1-z)^3 / 2) sum_{k>=0} (k+1)(k+2) z^k (log2(k+2) - log2(k+1)),
// truncated once the analytic remainder bound drops below tail_tol.
CapacityResult quantum_capacity_detailed(MassIndicator z, double tail_tol,
                                         int term_cap = kDefaultTermCap);

double quantum_capacity(MassIndicator z, double tail_tol);

}  // namespace prbh
