#pragma once

#include <cstddef>
#include <string>

#include "slidestats/profile.hpp"

namespace slide {

/// First slide number of a distance profile, closed form. Always >= 0 up to
/// rounding.
double rho1(const DistanceProfile& p);

/// Second slide number of a distance profile, closed form. Natural logs
/// throughout.
double rho2(const DistanceProfile& p);

/// Slide function of the step density f_D: the genial entropy of the
/// normalised power f_D^t / A(t). Zero at t = 0 and nonnegative.
///
/// Evaluated in log space around the geometric mean of the profile, so
/// large t only overflows when t * log-spread itself is not representable;
/// that case throws Overflow.
double slide_function_step(const DistanceProfile& p, double t);

/// Extended-precision evaluation used by the finite-difference oracles.
long double slide_function_step_extended(const DistanceProfile& p, long double t);

struct FiniteDifferenceOptions {
    double base_step = 1e-3;  // scaled by the profile's log-spread
    int levels = 3;           // Richardson levels (halving steps)
};

/// Independent oracle for rho1: one-sided Richardson-extrapolated first
/// difference of the slide function at 0. Throws OracleUnstable when the
/// Richardson corrections grow instead of shrinking.
double rho1_fd(const DistanceProfile& p, const FiniteDifferenceOptions& opts = {});

/// Independent oracle for rho2, second difference on a right-sided stencil.
double rho2_fd(const DistanceProfile& p, const FiniteDifferenceOptions& opts = {});

struct SlideEstimate {
    double rho1 = 0;
    double rho2 = 0;
    std::size_t n = 0;
    std::string provenance;
};

SlideEstimate estimate(const DistanceProfile& p, std::string provenance = {});

}  // namespace slide
