#pragma once

#include <cmath>

namespace prbh {

// Neumaier-compensated accumulator. The series tolerances in this library
// go down to 1e-12, which plain left-to-right summation does not reliably
// deliver once a few hundred thousand terms are involved.
class KahanAccumulator {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace prbh
