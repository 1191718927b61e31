#pragma once

#include <cmath>
#include <span>

namespace slide {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when an addend is larger in magnitude than the running sum.
template <class Real = double>
class CompensatedSum {
public:
    CompensatedSum& operator+=(Real x) noexcept {
        const Real t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    Real value() const noexcept { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

template <class Real>
Real compensated_sum(std::span<const Real> xs) noexcept {
    CompensatedSum<Real> acc;
    for (Real x : xs) acc += x;
    return acc.value();
}

}  // namespace slide
