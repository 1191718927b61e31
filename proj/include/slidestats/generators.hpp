#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slidestats/point_cloud.hpp"

namespace slide {

enum class SourceKind {
    UniformCube,
    Normal,
    BivariateNormal,
    Exponential,
    SqrtPower,
    Laplace,
    Cauchy,
    Stable,
    Cantor,
    Sierpinski,
    CosWalk,
    Primes,
};

std::string_view to_string(SourceKind kind) noexcept;
SourceKind parse_source_kind(std::string_view s);

/// Data source for sampling. `dimension` only matters for UniformCube,
/// alpha/beta only for Stable, burn_in only for Sierpinski. CosWalk and
/// Primes ignore the seed.
struct SourceSpec {
    SourceKind kind = SourceKind::UniformCube;
    std::size_t dimension = 1;
    double alpha = 2.0;
    double beta = 0.0;
    std::size_t size = 2;
    std::uint64_t seed = 0;
    std::size_t burn_in = 100;

    /// Ambient dimension of the generated points.
    std::size_t point_dimension() const noexcept;
    bool deterministic() const noexcept;
    /// Human-readable row label, e.g. "uniform-cube(3)" or "stable(1.5,0.25)".
    std::string label() const;
    /// Throws BadSpec on violated invariants.
    void validate() const;
};

/// Draws spec.size points from stream `stream` of spec.seed. Identical
/// (spec, stream) pairs give identical clouds.
PointCloud sample(const SourceSpec& spec, std::uint64_t stream = 0);

/// Chambers-Mallows-Stuck variates for S(alpha, beta, 1, 0) in the
/// Samorodnitsky-Taqqu parameterisation.
PointCloud sample_stable(double alpha, double beta, std::size_t k, std::uint64_t seed,
                         std::uint64_t stream = 0);

/// Points sum_{i=1}^{40} a_i / 3^i with a_i in {0, 2}. Values that collide
/// after rounding to double are redrawn (at most 100 times per point).
PointCloud cantor_points(std::size_t k, std::uint64_t seed, std::uint64_t stream = 0);

/// Chaos game on the triangle (0,0), (1,0), (1/2, sqrt(3)/2) started at the
/// origin; the first burn_in iterates are discarded.
PointCloud sierpinski_points(std::size_t k, std::uint64_t seed, std::size_t burn_in = 100,
                             std::uint64_t stream = 0);

/// x_0 = 0, x_{i+1} = x_i + cos(i); the first k iterates.
PointCloud cos_walk(std::size_t k);

/// The first k primes, by segmented sieve.
std::vector<std::uint64_t> first_primes(std::size_t k);
PointCloud primes(std::size_t k);

}  // namespace slide
