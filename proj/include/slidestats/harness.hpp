#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slidestats/generators.hpp"
#include "slidestats/nn.hpp"
#include "slidestats/slide.hpp"

namespace slide {

struct RunOptions {
    std::size_t threads = 1;
    GapMode mode = GapMode::Nearest;  // 1-D sources only
    NnEngine engine = NnEngine::Auto;
};

/// Profile of a cloud: the sort-based path for 1-D clouds, the general
/// engine otherwise.
DistanceProfile cloud_profile(const PointCloud& pc, const RunOptions& opts = {});

/// Per-replicate (rho1, rho2); replicate r samples stream r of `seed`.
std::vector<SlideEstimate> replicate_values(SourceSpec spec, std::size_t sample_size, std::size_t reps,
                                            std::uint64_t seed, const RunOptions& opts = {});

struct ExperimentSummary {
    SourceSpec spec;
    std::size_t reps = 0;
    std::size_t sample_size = 0;
    double mu1 = 0, sigma1 = 0;
    double mu2 = 0, sigma2 = 0;
    std::uint64_t seed = 0;

    double dim_est1() const;  // 1 / mu1
    double dim_est2() const;  // pi / sqrt(-6 mu2), NaN when mu2 >= 0
};

/// Mean and sample standard deviation of rho1 and rho2 over reps >= 2
/// replicates. Identical inputs give identical summaries for any thread
/// count.
ExperimentSummary replicate(SourceSpec spec, std::size_t sample_size, std::size_t reps, std::uint64_t seed,
                            const RunOptions& opts = {});

/// The ten simulation rows: uniform on an interval, normal, exponential,
/// 1/(2 sqrt x), uniform squares/cubes/4-cubes, bivariate normal, Cantor,
/// Sierpinski.
std::vector<SourceSpec> standard_rows();

/// replicate() over each row; row j uses seed derive_seed(seed, j).
std::vector<ExperimentSummary> table_run(const std::vector<SourceSpec>& rows, std::size_t sample_size,
                                         std::size_t reps, std::uint64_t seed, const RunOptions& opts = {});

/// Header kind,m,size,reps,mu1,sigma1,mu2,sigma2,dim_est1,dim_est2.
void write_summary_csv(std::ostream& out, const std::vector<ExperimentSummary>& rows);

struct TangibilityReport {
    double dimension = 0;
    double target_rho1 = 0, target_rho2 = 0;
    double mu1 = 0, mu2 = 0;
    double dim_est1 = 0, dim_est2 = 0;
    double rel_err1 = 0, rel_err2 = 0;  // |estimate - d| / d
    bool consistent = false;           // both estimates within tolerance
};

/// Compares a summary against a tangible process of dimension d. Throws
/// NonNegativeRho2 when mu2 >= 0.
TangibilityReport tangibility_check(const ExperimentSummary& summary, double d, double rel_tol = 0.03);

/// Source of scatter samples: a fixed spec, or stable laws with alpha and
/// beta drawn uniformly per sample.
struct CloudFamily {
    SourceSpec spec;
    bool random_stable = false;
    double alpha_lo = 1.0, alpha_hi = 2.0;
    double beta_lo = 0.0, beta_hi = 1.0;
};

struct CloudPoint {
    double rho2;
    double rho1;
    double alpha;  // NaN unless the family is stable
    double beta;
};

/// `count` scatter points, each from one sample of `sample_length` values,
/// optionally delay-embedded at depth embed_n first.
std::vector<CloudPoint> cloud(const CloudFamily& family, std::size_t count, std::size_t sample_length,
                              std::optional<std::size_t> embed_n, std::uint64_t seed,
                              const RunOptions& opts = {});

struct NormalityOptions {
    std::optional<std::size_t> embed_n;  // none: the raw 1-D sample
    std::size_t reps = 500;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    std::size_t threads = 1;
};

struct TestReport {
    double rho1 = 0, rho2 = 0;
    std::string null_spec;
    std::size_t reps = 0;
    double statistic = 0;  // squared Mahalanobis distance to the null cloud
    double p_value = 1;
    double alpha = 0.05;
    bool reject = false;
};

/// Monte Carlo goodness-of-fit test for normality. The null cloud holds
/// (rho1, rho2) of `reps` standard-normal series of the same length, treated
/// the same way as the data; no parameters are estimated because both
/// statistics are location and scale free. The p-value is
/// (1 + #{null distance >= observed}) / (reps + 1) under the Mahalanobis
/// distance built from the null cloud's mean and covariance.
TestReport normality_test(std::span<const double> data, const NormalityOptions& opts);

}  // namespace slide
