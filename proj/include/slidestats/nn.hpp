#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "slidestats/point_cloud.hpp"
#include "slidestats/profile.hpp"

namespace slide {

enum class GapMode { Nearest, Consecutive };
enum class NnEngine { Auto, KdTree, Brute };

GapMode parse_gap_mode(std::string_view s);
NnEngine parse_engine(std::string_view s);

/// 1-D profile after a single sort. Nearest: each point's smaller adjacent
/// gap. Consecutive: the k-1 adjacent gaps. Throws DuplicatePoint on a zero
/// gap.
DistanceProfile nn_distances_1d(std::span<const double> xs, GapMode mode = GapMode::Nearest);

/// Exact Euclidean nearest-neighbour distance of every point, in input
/// order. Auto picks the k-d tree for dimension <= 10, brute force above.
/// Both engines evaluate the same squared-distance expression, so their
/// results are bitwise identical. Throws DuplicatePoint on a zero distance.
std::vector<double> nearest_neighbor_distances(const PointCloud& pc, NnEngine engine = NnEngine::Auto,
                                               std::size_t threads = 1);

/// nearest_neighbor_distances sorted into a profile.
DistanceProfile nn_distances(const PointCloud& pc, NnEngine engine = NnEngine::Auto,
                             std::size_t threads = 1);

/// Exact k-d tree over a point cloud: median splits on the widest axis,
/// leaves of at most 16 points.
class KdTree {
public:
    explicit KdTree(const PointCloud& pc);

    /// Index and squared distance of the nearest point other than `self`.
    struct Hit {
        std::size_t index;
        double dist2;
    };
    Hit nearest_excluding(std::size_t self) const;

    static constexpr std::size_t kLeafSize = 16;

private:
    struct Node {
        std::size_t begin, end;  // range in order_
        std::size_t axis = 0;
        double split = 0;
        int left = -1, right = -1;
    };

    int build(std::size_t begin, std::size_t end);
    void search(int node, std::span<const double> q, std::size_t self, Hit& best) const;

    const PointCloud* pc_;
    std::vector<std::size_t> order_;
    std::vector<Node> nodes_;
};

}  // namespace slide
