#include "slidestats/reference.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "slidestats/error.hpp"

namespace slide {

double log_slide_reference(double t) {
    if (!(t >= 0) || !std::isfinite(t))
        throw Error(ErrorCode::InvalidArgument, "reference slide function needs a finite t >= 0");
    if (t == 0) return 0.0;
    // t digamma(t) = t digamma(1 + t) - 1 removes the 1/t pole.
    return t - t * boost::math::digamma(1.0 + t) + std::lgamma(1.0 + t);
}

double zeta(int s) {
    static constexpr std::array<double, 9> table = {
        1.6449340668482264,  // zeta(2)
        1.2020569031595943,  // zeta(3)
        1.0823232337111382,  // zeta(4)
        1.0369277551433699,  // zeta(5)
        1.0173430619844491,  // zeta(6)
        1.0083492773819228,  // zeta(7)
        1.0040773561979443,  // zeta(8)
        1.0020083928260822,  // zeta(9)
        1.0009945751278181,  // zeta(10)
    };
    if (s < 2) throw Error(ErrorCode::InvalidArgument, "zeta(s) needs integer s >= 2");
    if (s <= 10) return table[static_cast<std::size_t>(s - 2)];
    // Terms decay like k^-11 or faster; stop once a term drops below 1e-17.
    double sum = 1.0;
    for (int k = 2;; ++k) {
        const double term = std::pow(static_cast<double>(k), -s);
        sum += term;
        if (term < 1e-17) break;
    }
    return sum;
}

double tangible_target(double d, int n) {
    if (!(d > 0) || !std::isfinite(d))
        throw Error(ErrorCode::InvalidArgument, "dimension must be positive and finite");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
    if (n == 1) return 1.0 / d;
    double factorial = 1.0;
    for (int k = 2; k < n; ++k) factorial *= k;
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign * factorial * (n - 1) * zeta(n) / std::pow(d, n);
}

double dimension_from_rho2(double rho2) {
    if (!(rho2 < 0))
        throw Error(ErrorCode::NonNegativeRho2,
                    "rho2 = " + std::to_string(rho2) + " is not negative; no tangible dimension");
    return std::numbers::pi / std::sqrt(-6.0 * rho2);
}

TangibilityTarget make_tangibility_target(double d, int n) {
    return TangibilityTarget{d, n, tangible_target(d, n)};
}

}  // namespace slide
