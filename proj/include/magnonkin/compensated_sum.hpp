#pragma once

#include <cmath>
#include <span>

#ifdef __FAST_MATH__
#error "compensated summation is defeated by -ffast-math"
#endif

namespace magnonkin {

// Neumaier's variant of Kahan summation. The result depends only on the
// order in which terms are added, so a fixed traversal gives bit-stable sums.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace magnonkin
