#include "slidestats/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "slidestats/error.hpp"

namespace slide {

DistanceProfile DistanceProfile::from_distances(std::vector<double> ds) {
    if (ds.size() < 2)
        throw Error(ErrorCode::TooFewPoints,
                    "a distance profile needs at least 2 entries, got " + std::to_string(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!std::isfinite(ds[i]))
            throw Error(ErrorCode::InvalidArgument, "non-finite distance at index " + std::to_string(i));
        if (ds[i] <= 0)
            throw Error(ErrorCode::NonPositiveDistance,
                        "distance at index " + std::to_string(i) + " is not positive (duplicate points?)");
    }
    std::sort(ds.begin(), ds.end(), std::greater<>());
    return DistanceProfile(std::move(ds));
}

DistanceProfile DistanceProfile::scaled(double lambda) const {
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw Error(ErrorCode::InvalidArgument, "scale factor must be positive and finite");
    std::vector<double> out(d_);
    for (double& x : out) x *= lambda;
    return from_distances(std::move(out));
}

DistanceProfile DistanceProfile::powered(double r) const {
    if (!(r > 0) || !std::isfinite(r))
        throw Error(ErrorCode::InvalidArgument, "exponent must be positive and finite");
    std::vector<double> out(d_);
    for (double& x : out) x = std::pow(x, r);
    return from_distances(std::move(out));
}

}  // namespace slide
