#include "slidestats/harness.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "slidestats/csv.hpp"
#include "slidestats/error.hpp"
#include "slidestats/parallel.hpp"
#include "slidestats/reference.hpp"
#include "slidestats/returns.hpp"
#include "slidestats/rng.hpp"
#include "slidestats/summation.hpp"

namespace slide {

namespace {

struct Moments {
    double mean = 0;
    double sd = 0;
};

Moments moments(const std::vector<double>& xs) {
    CompensatedSum<double> s;
    for (double x : xs) s += x;
    const double mean = s.value() / static_cast<double>(xs.size());
    CompensatedSum<double> ss;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss.value() / static_cast<double>(xs.size() - 1))};
}

SlideEstimate series_estimate(const std::vector<double>& series, std::optional<std::size_t> embed_n,
                              const RunOptions& opts) {
    if (!embed_n) return estimate(cloud_profile(PointCloud::from_1d(series), opts));
    const ReturnSeries rs{series, {}};
    return estimate(nn_distances(delay_embed(rs, *embed_n), opts.engine, 1));
}

}  // namespace

DistanceProfile cloud_profile(const PointCloud& pc, const RunOptions& opts) {
    if (pc.dimension() == 1) return nn_distances_1d(pc.coordinates(), opts.mode);
    return nn_distances(pc, opts.engine, 1);
}

std::vector<SlideEstimate> replicate_values(SourceSpec spec, std::size_t sample_size, std::size_t reps,
                                            std::uint64_t seed, const RunOptions& opts) {
    spec.size = sample_size;
    spec.seed = seed;
    spec.validate();
    std::vector<SlideEstimate> out(reps);
    parallel_for(reps, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) out[r] = estimate(cloud_profile(sample(spec, r), opts), spec.label());
    });
    return out;
}

double ExperimentSummary::dim_est1() const { return 1.0 / mu1; }

double ExperimentSummary::dim_est2() const {
    return mu2 < 0 ? dimension_from_rho2(mu2) : std::numeric_limits<double>::quiet_NaN();
}

ExperimentSummary replicate(SourceSpec spec, std::size_t sample_size, std::size_t reps, std::uint64_t seed,
                            const RunOptions& opts) {
    if (reps < 2) throw Error(ErrorCode::BadSpec, "need at least 2 replicates");
    const auto values = replicate_values(spec, sample_size, reps, seed, opts);
    std::vector<double> r1(reps), r2(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        r1[i] = values[i].rho1;
        r2[i] = values[i].rho2;
    }
    const Moments m1 = moments(r1), m2 = moments(r2);
    spec.size = sample_size;
    spec.seed = seed;
    return ExperimentSummary{spec, reps, sample_size, m1.mean, m1.sd, m2.mean, m2.sd, seed};
}

std::vector<SourceSpec> standard_rows() {
    auto row = [](SourceKind kind, std::size_t dim = 1) {
        SourceSpec s;
        s.kind = kind;
        s.dimension = dim;
        return s;
    };
    return {
        row(SourceKind::UniformCube, 1), row(SourceKind::Normal),         row(SourceKind::Exponential),
        row(SourceKind::SqrtPower),      row(SourceKind::UniformCube, 2), row(SourceKind::UniformCube, 3),
        row(SourceKind::UniformCube, 4), row(SourceKind::BivariateNormal), row(SourceKind::Cantor),
        row(SourceKind::Sierpinski),
    };
}

std::vector<ExperimentSummary> table_run(const std::vector<SourceSpec>& rows, std::size_t sample_size,
                                         std::size_t reps, std::uint64_t seed, const RunOptions& opts) {
    std::vector<ExperimentSummary> out;
    out.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        out.push_back(replicate(rows[j], sample_size, reps, derive_seed(seed, j), opts));
    return out;
}

void write_summary_csv(std::ostream& out, const std::vector<ExperimentSummary>& rows) {
    out << "kind,m,size,reps,mu1,sigma1,mu2,sigma2,dim_est1,dim_est2\n";
    for (const auto& s : rows) {
        out << s.spec.label() << ',' << s.spec.point_dimension() << ',' << s.sample_size << ',' << s.reps << ','
            << format_double(s.mu1) << ',' << format_double(s.sigma1) << ',' << format_double(s.mu2) << ','
            << format_double(s.sigma2) << ',' << format_double(s.dim_est1()) << ','
            << format_double(s.dim_est2()) << '\n';
    }
}

TangibilityReport tangibility_check(const ExperimentSummary& summary, double d, double rel_tol) {
    TangibilityReport r;
    r.dimension = d;
    r.target_rho1 = tangible_target(d, 1);
    r.target_rho2 = tangible_target(d, 2);
    r.mu1 = summary.mu1;
    r.mu2 = summary.mu2;
    r.dim_est1 = 1.0 / summary.mu1;
    r.dim_est2 = dimension_from_rho2(summary.mu2);
    r.rel_err1 = std::abs(r.dim_est1 - d) / d;
    r.rel_err2 = std::abs(r.dim_est2 - d) / d;
    r.consistent = r.rel_err1 <= rel_tol && r.rel_err2 <= rel_tol;
    return r;
}

std::vector<CloudPoint> cloud(const CloudFamily& family, std::size_t count, std::size_t sample_length,
                              std::optional<std::size_t> embed_n, std::uint64_t seed, const RunOptions& opts) {
    SourceSpec base = family.spec;
    if (family.random_stable) base.kind = SourceKind::Stable;
    base.size = sample_length;
    base.seed = seed;
    if (embed_n && base.point_dimension() != 1)
        throw Error(ErrorCode::BadSpec, "delay embedding needs a 1-D source");
    base.validate();
    const std::uint64_t param_seed = derive_seed(seed, 0xC10Du);

    std::vector<CloudPoint> out(count);
    parallel_for(count, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SourceSpec spec = base;
            if (family.random_stable) {
                Stream params(param_seed, i);
                spec.alpha = params.uniform(family.alpha_lo, family.alpha_hi);
                spec.beta = params.uniform(family.beta_lo, family.beta_hi);
            }
            const PointCloud pc = sample(spec, i);
            const SlideEstimate e =
                embed_n ? series_estimate({pc.coordinates().begin(), pc.coordinates().end()}, embed_n, opts)
                        : estimate(cloud_profile(pc, opts));
            const bool stable = spec.kind == SourceKind::Stable;
            out[i] = CloudPoint{e.rho2, e.rho1, stable ? spec.alpha : std::numeric_limits<double>::quiet_NaN(),
                                stable ? spec.beta : std::numeric_limits<double>::quiet_NaN()};
        }
    });
    return out;
}

TestReport normality_test(std::span<const double> data, const NormalityOptions& opts) {
    if (data.size() < 50) throw Error(ErrorCode::SeriesTooShort, "normality test needs at least 50 values");
    if (opts.reps < 3) throw Error(ErrorCode::BadSpec, "normality test needs at least 3 null replicates");
    if (!(opts.alpha > 0 && opts.alpha < 1)) throw Error(ErrorCode::BadSpec, "alpha must lie in (0, 1)");

    RunOptions run;
    const std::vector<double> series(data.begin(), data.end());
    const SlideEstimate observed = series_estimate(series, opts.embed_n, run);

    std::vector<double> n1(opts.reps), n2(opts.reps);
    parallel_for(opts.reps, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            Stream rng(opts.seed, r);
            std::vector<double> z(series.size());
            for (double& x : z) x = rng.normal();
            const SlideEstimate e = series_estimate(z, opts.embed_n, run);
            n1[r] = e.rho1;
            n2[r] = e.rho2;
        }
    });

    const Moments m1 = moments(n1), m2 = moments(n2);
    CompensatedSum<double> cov;
    for (std::size_t r = 0; r < opts.reps; ++r) cov += (n1[r] - m1.mean) * (n2[r] - m2.mean);
    const double s11 = m1.sd * m1.sd, s22 = m2.sd * m2.sd;
    const double s12 = cov.value() / static_cast<double>(opts.reps - 1);
    const double det = s11 * s22 - s12 * s12;
    if (!(det > 0)) throw Error(ErrorCode::BadSpec, "null cloud covariance is singular");

    auto distance = [&](double a, double b) {
        const double x = a - m1.mean, y = b - m2.mean;
        return (s22 * x * x - 2 * s12 * x * y + s11 * y * y) / det;
    };

    TestReport report;
    report.rho1 = observed.rho1;
    report.rho2 = observed.rho2;
    report.null_spec = opts.embed_n ? "normal(n=" + std::to_string(*opts.embed_n) + ")" : "normal";
    report.reps = opts.reps;
    report.statistic = distance(observed.rho1, observed.rho2);
    std::size_t extreme = 0;
    for (std::size_t r = 0; r < opts.reps; ++r)
        if (distance(n1[r], n2[r]) >= report.statistic) ++extreme;
    report.p_value = static_cast<double>(1 + extreme) / static_cast<double>(opts.reps + 1);
    report.alpha = opts.alpha;
    report.reject = report.p_value <= opts.alpha;
    return report;
}

}  // namespace slide
