#pragma once

namespace slide {

/// Slide function of f(x) = -ln x on (0, 1):
///   sigma(t) = -1 + t - t digamma(t) + lgamma(1 + t).
/// Its right derivatives at 0 are 1 and (-1)^{n+1} (n-1)! (n-1) zeta(n).
double log_slide_reference(double t);

/// Riemann zeta for integer s >= 2. Tabulated up to 10, summed beyond.
double zeta(int s);

/// Slide number of order n that a tangible process of dimension d must have.
double tangible_target(double d, int n);

/// Dimension implied by rho2 for a tangible process, pi / sqrt(-6 rho2).
/// Throws NonNegativeRho2 when rho2 >= 0.
double dimension_from_rho2(double rho2);

struct TangibilityTarget {
    double dimension;
    int order;
    double value;
};

TangibilityTarget make_tangibility_target(double d, int n);

}  // namespace slide
