#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "slidestats/profile.hpp"

namespace slide {

/// Piecewise-constant decreasing density anchored at 0: value values[i] on
/// [breakpoints[i-1], breakpoints[i]) with an implicit breakpoint 0 in front.
/// Zero-width pieces are dropped and equal neighbouring values merged, so the
/// stored values are strictly decreasing.
class StepDensity {
public:
    StepDensity(std::vector<double> breakpoints, std::vector<double> values);

    std::span<const double> breakpoints() const noexcept { return right_; }
    std::span<const double> values() const noexcept { return value_; }
    std::size_t pieces() const noexcept { return value_.size(); }

    /// Total mass, compensated sum of value * width.
    double mass() const;
    bool normalized(double tol = 1e-12) const;

    /// h(z) = f(z / lambda) / lambda on the dilated support.
    StepDensity dilated(double lambda) const;

private:
    std::vector<double> right_;
    std::vector<double> value_;
};

/// f_{D*}: the profile divided by its mean, laid out on [0, 1) in steps of 1/n.
StepDensity corner_density(const DistanceProfile& p);

/// 1 - L_{D*}: the complementary empirical CDF of the mean-normalised profile,
/// as a step density on [0, max d_i / mean).
StepDensity complement_ecdf_density(const DistanceProfile& p);

/// Exact genial entropy -1 - int f ln(x f) dx of a normalised step density.
/// Throws NotNormalized if the mass differs from 1 by more than 1e-12.
double genial_entropy_step(const StepDensity& s);

/// Genial entropy of 1 - L_{D*} for the profile.
double genial_entropy_complement_ecdf(const DistanceProfile& p);

struct Interval {
    double lower = 0;
    double upper = std::numeric_limits<double>::infinity();
};

/// Genial entropy of a decreasing density given as a callback, by
/// double-exponential quadrature (integrable endpoint singularities allowed,
/// 0 ln 0 = 0). Throws QuadratureNoConvergence if the error estimate exceeds
/// tol.
double genial_entropy_quadrature(const std::function<double(double)>& density, Interval domain,
                                 double tol = 1e-10);

/// -int f ln f dx over the domain, same machinery.
double differential_entropy_quadrature(const std::function<double(double)>& density, Interval domain,
                                       double tol = 1e-10);

/// int f(x) ln x dx over the domain.
double expected_log_quadrature(const std::function<double(double)>& density, Interval domain,
                               double tol = 1e-10);

}  // namespace slide
