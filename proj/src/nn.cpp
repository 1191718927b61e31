#include "slidestats/nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "slidestats/error.hpp"
#include "slidestats/parallel.hpp"

namespace slide {

namespace {

inline double dist2(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return s;
}

void require_two_points(std::size_t k) {
    if (k < 2)
        throw Error(ErrorCode::TooFewPoints, "need at least 2 points, got " + std::to_string(k));
}

std::vector<double> brute_force(const PointCloud& pc, std::size_t threads) {
    const std::size_t k = pc.size();
    std::vector<double> best(k, std::numeric_limits<double>::infinity());
    constexpr std::size_t kBlock = 256;

    if (resolve_threads(threads) <= 1) {
        // Each pair once; blocks keep both rows' coordinates in cache.
        for (std::size_t bi = 0; bi < k; bi += kBlock) {
            const std::size_t ei = std::min(k, bi + kBlock);
            for (std::size_t bj = bi; bj < k; bj += kBlock) {
                const std::size_t ej = std::min(k, bj + kBlock);
                for (std::size_t i = bi; i < ei; ++i) {
                    const auto p = pc.point(i);
                    double bi_best = best[i];
                    for (std::size_t j = std::max(bj, i + 1); j < ej; ++j) {
                        const double d = dist2(p, pc.point(j));
                        if (d < bi_best) bi_best = d;
                        if (d < best[j]) best[j] = d;
                    }
                    best[i] = bi_best;
                }
            }
        }
        return best;
    }

    // Parallel over query rows; every worker scans all candidates.
    parallel_for(k, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t b0 = begin; b0 < end; b0 += kBlock) {
            const std::size_t e0 = std::min(end, b0 + kBlock);
            for (std::size_t bj = 0; bj < k; bj += kBlock) {
                const std::size_t ej = std::min(k, bj + kBlock);
                for (std::size_t i = b0; i < e0; ++i) {
                    const auto p = pc.point(i);
                    double m = best[i];
                    for (std::size_t j = bj; j < ej; ++j) {
                        if (j == i) continue;
                        const double d = dist2(p, pc.point(j));
                        if (d < m) m = d;
                    }
                    best[i] = m;
                }
            }
        }
    });
    return best;
}

std::vector<double> kd_tree(const PointCloud& pc, std::size_t threads) {
    const KdTree tree(pc);
    std::vector<double> best(pc.size());
    parallel_for(pc.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) best[i] = tree.nearest_excluding(i).dist2;
    });
    return best;
}

}  // namespace

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coordinates)
    : dim_(dimension), coords_(std::move(coordinates)) {
    if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "point dimension must be >= 1");
    if (coords_.size() % dim_ != 0)
        throw Error(ErrorCode::InvalidArgument, "coordinate count is not a multiple of the dimension");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!std::isfinite(coords_[i]))
            throw Error(ErrorCode::InvalidArgument,
                        "non-finite coordinate in point " + std::to_string(i / dim_));
}

PointCloud dedupe(const PointCloud& pc) {
    std::set<std::vector<double>> seen;
    std::vector<double> out;
    out.reserve(pc.coordinates().size());
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        if (seen.emplace(p.begin(), p.end()).second) out.insert(out.end(), p.begin(), p.end());
    }
    return PointCloud(pc.dimension(), std::move(out));
}

GapMode parse_gap_mode(std::string_view s) {
    if (s == "nearest") return GapMode::Nearest;
    if (s == "consecutive") return GapMode::Consecutive;
    throw Error(ErrorCode::InvalidArgument, "unknown gap mode '" + std::string(s) + "'");
}

NnEngine parse_engine(std::string_view s) {
    if (s == "auto") return NnEngine::Auto;
    if (s == "kdtree") return NnEngine::KdTree;
    if (s == "brute") return NnEngine::Brute;
    throw Error(ErrorCode::InvalidArgument, "unknown nearest-neighbour engine '" + std::string(s) + "'");
}

DistanceProfile nn_distances_1d(std::span<const double> xs, GapMode mode) {
    require_two_points(xs.size());
    std::vector<double> sorted(xs.begin(), xs.end());
    for (double x : sorted)
        if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
    std::sort(sorted.begin(), sorted.end());

    const std::size_t k = sorted.size();
    std::vector<double> gaps(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        gaps[i] = sorted[i + 1] - sorted[i];
        if (gaps[i] == 0)
            throw Error(ErrorCode::DuplicatePoint, "duplicate point at x = " + std::to_string(sorted[i]));
    }
    if (mode == GapMode::Consecutive) return DistanceProfile::from_distances(std::move(gaps));

    std::vector<double> d(k);
    d[0] = gaps[0];
    d[k - 1] = gaps[k - 2];
    for (std::size_t i = 1; i + 1 < k; ++i) d[i] = std::min(gaps[i - 1], gaps[i]);
    return DistanceProfile::from_distances(std::move(d));
}

std::vector<double> nearest_neighbor_distances(const PointCloud& pc, NnEngine engine,
                                               std::size_t threads) {
    require_two_points(pc.size());
    if (engine == NnEngine::Auto) engine = pc.dimension() <= 10 ? NnEngine::KdTree : NnEngine::Brute;
    std::vector<double> best = engine == NnEngine::KdTree ? kd_tree(pc, threads) : brute_force(pc, threads);
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (best[i] == 0)
            throw Error(ErrorCode::DuplicatePoint,
                        "point " + std::to_string(i) + " coincides with another point");
        best[i] = std::sqrt(best[i]);
    }
    return best;
}

DistanceProfile nn_distances(const PointCloud& pc, NnEngine engine, std::size_t threads) {
    return DistanceProfile::from_distances(nearest_neighbor_distances(pc, engine, threads));
}

KdTree::KdTree(const PointCloud& pc) : pc_(&pc), order_(pc.size()) {
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    nodes_.reserve(2 * (order_.size() / kLeafSize + 1));
    if (!order_.empty()) build(0, order_.size());
}

int KdTree::build(std::size_t begin, std::size_t end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{begin, end});
    if (end - begin <= kLeafSize) return id;

    const std::size_t m = pc_->dimension();
    std::size_t axis = 0;
    double widest = -1;
    for (std::size_t a = 0; a < m; ++a) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t i = begin; i < end; ++i) {
            const double v = pc_->point(order_[i])[a];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > widest) {
            widest = hi - lo;
            axis = a;
        }
    }
    if (widest <= 0) return id;  // all points coincide

    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                     order_.begin() + static_cast<std::ptrdiff_t>(mid),
                     order_.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) { return pc_->point(a)[axis] < pc_->point(b)[axis]; });
    const double split = pc_->point(order_[mid])[axis];
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].axis = axis;
    nodes_[id].split = split;
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void KdTree::search(int id, std::span<const double> q, std::size_t self, Hit& best) const {
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    if (node.left < 0) {
        for (std::size_t i = node.begin; i < node.end; ++i) {
            const std::size_t idx = order_[i];
            if (idx == self) continue;
            const double d = dist2(q, pc_->point(idx));
            if (d < best.dist2) best = Hit{idx, d};
        }
        return;
    }
    // Left holds coordinates <= split, right >= split.
    const double delta = q[node.axis] - node.split;
    const int near = delta < 0 ? node.left : node.right;
    const int far = delta < 0 ? node.right : node.left;
    search(near, q, self, best);
    if (delta * delta < best.dist2) search(far, q, self, best);
}

KdTree::Hit KdTree::nearest_excluding(std::size_t self) const {
    Hit best{self, std::numeric_limits<double>::infinity()};
    if (!nodes_.empty()) search(0, pc_->point(self), self, best);
    return best;
}

}  // namespace slide
