#include "slidestats/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "slidestats/error.hpp"
#include "slidestats/rng.hpp"

namespace slide {

namespace {

constexpr std::array<std::pair<SourceKind, std::string_view>, 12> kKindNames = {{
    {SourceKind::UniformCube, "uniform-cube"},
    {SourceKind::Normal, "normal"},
    {SourceKind::BivariateNormal, "bivariate-normal"},
    {SourceKind::Exponential, "exponential"},
    {SourceKind::SqrtPower, "sqrt-power"},
    {SourceKind::Laplace, "laplace"},
    {SourceKind::Cauchy, "cauchy"},
    {SourceKind::Stable, "stable"},
    {SourceKind::Cantor, "cantor"},
    {SourceKind::Sierpinski, "sierpinski"},
    {SourceKind::CosWalk, "cos-walk"},
    {SourceKind::Primes, "primes"},
}};

void require_size(std::size_t k) {
    if (k < 2) throw Error(ErrorCode::BadSpec, "sample size must be >= 2");
}

void validate_stable(double alpha, double beta) {
    if (!(alpha > 0 && alpha <= 2)) throw Error(ErrorCode::BadSpec, "stable alpha must lie in (0, 2]");
    if (!(beta >= -1 && beta <= 1)) throw Error(ErrorCode::BadSpec, "stable beta must lie in [-1, 1]");
}

double stable_variate(Stream& rng, double alpha, double beta) {
    constexpr double half_pi = std::numbers::pi / 2;
    const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) {
        const double bv = half_pi + beta * v;
        return (bv * std::tan(v) - beta * std::log(half_pi * w * std::cos(v) / bv)) / half_pi;
    }
    const double zeta = beta * std::tan(half_pi * alpha);
    const double b = std::atan(zeta) / alpha;
    const double s = std::pow(1.0 + zeta * zeta, 1.0 / (2.0 * alpha));
    const double av = alpha * (v + b);
    return s * std::sin(av) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos(v - av) / w, (1.0 - alpha) / alpha);
}

template <class Draw>
PointCloud draw_1d(std::size_t k, Stream& rng, Draw&& draw) {
    std::vector<double> xs(k);
    for (double& x : xs) x = draw(rng);
    return PointCloud::from_1d(std::move(xs));
}

}  // namespace

std::string_view to_string(SourceKind kind) noexcept {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

SourceKind parse_source_kind(std::string_view s) {
    for (const auto& [k, name] : kKindNames)
        if (name == s) return k;
    throw Error(ErrorCode::BadSpec, "unknown source kind '" + std::string(s) + "'");
}

std::size_t SourceSpec::point_dimension() const noexcept {
    switch (kind) {
    case SourceKind::UniformCube: return dimension;
    case SourceKind::BivariateNormal:
    case SourceKind::Sierpinski: return 2;
    default: return 1;
    }
}

bool SourceSpec::deterministic() const noexcept {
    return kind == SourceKind::CosWalk || kind == SourceKind::Primes;
}

std::string SourceSpec::label() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == SourceKind::UniformCube) os << '(' << dimension << ')';
    if (kind == SourceKind::Stable) os << '(' << alpha << ';' << beta << ')';
    return os.str();
}

void SourceSpec::validate() const {
    require_size(size);
    if (kind == SourceKind::UniformCube && dimension < 1)
        throw Error(ErrorCode::BadSpec, "uniform-cube dimension must be >= 1");
    if (kind == SourceKind::Stable) validate_stable(alpha, beta);
}

PointCloud sample(const SourceSpec& spec, std::uint64_t stream) {
    spec.validate();
    const std::size_t k = spec.size;
    switch (spec.kind) {
    case SourceKind::CosWalk: return cos_walk(k);
    case SourceKind::Primes: return primes(k);
    case SourceKind::Stable: return sample_stable(spec.alpha, spec.beta, k, spec.seed, stream);
    case SourceKind::Cantor: return cantor_points(k, spec.seed, stream);
    case SourceKind::Sierpinski: return sierpinski_points(k, spec.seed, spec.burn_in, stream);
    default: break;
    }

    Stream rng(spec.seed, stream);
    switch (spec.kind) {
    case SourceKind::UniformCube: {
        std::vector<double> xs(k * spec.dimension);
        for (double& x : xs) x = rng.uniform();
        return PointCloud(spec.dimension, std::move(xs));
    }
    case SourceKind::BivariateNormal: {
        std::vector<double> xs(2 * k);
        for (double& x : xs) x = rng.normal();
        return PointCloud(2, std::move(xs));
    }
    case SourceKind::Normal: return draw_1d(k, rng, [](Stream& r) { return r.normal(); });
    case SourceKind::Exponential: return draw_1d(k, rng, [](Stream& r) { return r.exponential(); });
    case SourceKind::SqrtPower:
        // Inverse CDF of 1/(2 sqrt x) on [0, 1].
        return draw_1d(k, rng, [](Stream& r) {
            const double u = r.uniform_open();
            return u * u;
        });
    case SourceKind::Laplace:
        return draw_1d(k, rng, [](Stream& r) { return r.exponential() - r.exponential(); });
    case SourceKind::Cauchy:
        return draw_1d(k, rng, [](Stream& r) { return std::tan(std::numbers::pi * (r.uniform_open() - 0.5)); });
    default: break;
    }
    throw Error(ErrorCode::BadSpec, "unhandled source kind");
}

PointCloud sample_stable(double alpha, double beta, std::size_t k, std::uint64_t seed, std::uint64_t stream) {
    validate_stable(alpha, beta);
    require_size(k);
    Stream rng(seed, stream);
    return draw_1d(k, rng, [&](Stream& r) { return stable_variate(r, alpha, beta); });
}

PointCloud cantor_points(std::size_t k, std::uint64_t seed, std::uint64_t stream) {
    require_size(k);
    constexpr int kDigits = 40;
    constexpr int kMaxAttempts = 100;
    long double scale = 1;
    for (int i = 0; i < kDigits; ++i) scale *= 3;  // 3^40 < 2^64, exact in long double

    Stream rng(seed, stream);
    std::unordered_set<double> seen;
    std::vector<double> xs;
    xs.reserve(k);
    while (xs.size() < k) {
        int attempt = 0;
        for (;; ++attempt) {
            if (attempt == kMaxAttempts)
                throw Error(ErrorCode::BadSpec, "cantor sampler could not draw a distinct point");
            const std::uint64_t bits = rng.bits();
            std::uint64_t n = 0;  // base-3 integer with digits a_1 .. a_40
            for (int i = 0; i < kDigits; ++i) n = 3 * n + (((bits >> i) & 1U) ? 2U : 0U);
            const double x = static_cast<double>(static_cast<long double>(n) / scale);
            if (seen.insert(x).second) {
                xs.push_back(x);
                break;
            }
        }
    }
    return PointCloud::from_1d(std::move(xs));
}

PointCloud sierpinski_points(std::size_t k, std::uint64_t seed, std::size_t burn_in, std::uint64_t stream) {
    require_size(k);
    static constexpr std::array<std::array<double, 2>, 3> vertices = {{
        {0.0, 0.0},
        {1.0, 0.0},
        {0.5, 0.86602540378443864676},  // sqrt(3)/2
    }};
    Stream rng(seed, stream);
    double x = 0, y = 0;
    std::vector<double> xs;
    xs.reserve(2 * k);
    for (std::size_t i = 0; i < burn_in + k; ++i) {
        const auto& v = vertices[rng.below(3)];
        x = 0.5 * (x + v[0]);
        y = 0.5 * (y + v[1]);
        if (i >= burn_in) {
            xs.push_back(x);
            xs.push_back(y);
        }
    }
    return PointCloud(2, std::move(xs));
}

PointCloud cos_walk(std::size_t k) {
    require_size(k);
    std::vector<double> xs(k);
    xs[0] = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) xs[i + 1] = xs[i] + std::cos(static_cast<double>(i));
    return PointCloud::from_1d(std::move(xs));
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
    std::vector<std::uint64_t> out;
    if (k == 0) return out;
    out.reserve(k);
    // p_k < k (ln k + ln ln k) for k >= 6.
    const double kd = static_cast<double>(k);
    const std::uint64_t limit =
        k < 6 ? 15 : static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 1;

    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    constexpr std::uint64_t kSegment = 1U << 18;
    std::vector<char> seg(kSegment);
    for (std::uint64_t lo = 2; lo <= limit && out.size() < k; lo += kSegment) {
        const std::uint64_t hi = std::min(limit + 1, lo + kSegment);
        std::fill(seg.begin(), seg.end(), 1);
        for (std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j < hi; j += p) seg[j - lo] = 0;
        }
        for (std::uint64_t i = lo; i < hi && out.size() < k; ++i)
            if (seg[i - lo]) out.push_back(i);
    }
    return out;
}

PointCloud primes(std::size_t k) {
    require_size(k);
    const auto ps = first_primes(k);
    std::vector<double> xs(ps.begin(), ps.end());
    return PointCloud::from_1d(std::move(xs));
}

}  // namespace slide
