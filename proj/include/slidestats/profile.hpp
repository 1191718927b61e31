#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace slide {

/// Nearest-neighbour distances sorted in descending order, all strictly
/// positive, at least two entries. Ties are kept.
class DistanceProfile {
public:
    /// Sorts and validates. Throws NonPositiveDistance, TooFewPoints, or
    /// InvalidArgument for non-finite entries.
    static DistanceProfile from_distances(std::vector<double> ds);

    std::span<const double> values() const noexcept { return d_; }
    std::size_t size() const noexcept { return d_.size(); }
    double operator[](std::size_t i) const noexcept { return d_[i]; }

    /// Every distance multiplied by lambda > 0.
    DistanceProfile scaled(double lambda) const;
    /// Every distance raised to the power r > 0.
    DistanceProfile powered(double r) const;

private:
    explicit DistanceProfile(std::vector<double> d) : d_(std::move(d)) {}

    std::vector<double> d_;
};

inline DistanceProfile make_profile(std::vector<double> ds) {
    return DistanceProfile::from_distances(std::move(ds));
}

}  // namespace slide
