#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace slide {

/// k points in R^m stored row-major. Euclidean metric only.
class PointCloud {
public:
    PointCloud() = default;
    /// Throws InvalidArgument on shape mismatch or non-finite coordinates.
    PointCloud(std::size_t dimension, std::vector<double> coordinates);

    static PointCloud from_1d(std::vector<double> xs) { return PointCloud(1, std::move(xs)); }

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dimension() const noexcept { return dim_; }
    std::span<const double> point(std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coordinates() const noexcept { return coords_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

/// Removes exact duplicate rows, keeping the first occurrence in input order.
PointCloud dedupe(const PointCloud& pc);

}  // namespace slide
