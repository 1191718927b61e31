#include "slidestats/returns.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "slidestats/csv.hpp"
#include "slidestats/error.hpp"
#include "slidestats/parallel.hpp"
#include "slidestats/slide.hpp"

namespace slide {

namespace {

DistanceProfile embedded_profile(const ReturnSeries& rs, std::size_t n, const CurveOptions& opts,
                                 std::size_t threads) {
    const PointCloud cloud = delay_embed(rs, n, opts.windows);
    try {
        return nn_distances(cloud, opts.engine, threads);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DuplicatePoint) throw;
        throw Error(ErrorCode::DuplicatePoint,
                    "two length-" + std::to_string(n) +
                        " return windows coincide exactly; drop duplicated rows from the input");
    }
}

}  // namespace

ReturnSeries log_returns(const std::vector<double>& prices, std::string label) {
    if (prices.size() < 2) throw Error(ErrorCode::SeriesTooShort, "need at least 2 prices");
    ReturnSeries rs{std::vector<double>(prices.size() - 1), std::move(label)};
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        if (!(prices[i] > 0) || !(prices[i + 1] > 0))
            throw Error(ErrorCode::NonPositivePrice, "price at index " + std::to_string(prices[i] > 0 ? i + 1 : i) +
                                                         " is not positive");
        rs.u[i] = std::log(prices[i + 1] / prices[i]);
    }
    return rs;
}

PointCloud delay_embed(const ReturnSeries& rs, std::size_t n, std::optional<std::size_t> windows) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "embedding depth must be >= 1");
    const std::size_t len = rs.u.size();
    if (len < n)
        throw Error(ErrorCode::SeriesTooShort, "series of length " + std::to_string(len) +
                                                   " has no window of length " + std::to_string(n));
    const std::size_t available = len - n + 1;
    const std::size_t count = windows.value_or(available);
    if (count > available)
        throw Error(ErrorCode::SeriesTooShort, std::to_string(count) + " windows of length " + std::to_string(n) +
                                                   " need a series of length " +
                                                   std::to_string(n + count - 1));
    std::vector<double> coords;
    coords.reserve(count * n);
    for (std::size_t w = 0; w < count; ++w)
        coords.insert(coords.end(), rs.u.begin() + static_cast<std::ptrdiff_t>(w),
                      rs.u.begin() + static_cast<std::ptrdiff_t>(w + n));
    return PointCloud(n, std::move(coords));
}

RhoCurve rho_curve(const ReturnSeries& rs, std::size_t n_min, std::size_t n_max, const CurveOptions& opts) {
    if (n_min == 0 || n_max < n_min)
        throw Error(ErrorCode::InvalidArgument, "depth range must satisfy 1 <= n_min <= n_max");
    RhoCurve curve{rs.label, std::vector<RhoCurveRow>(n_max - n_min + 1)};
    parallel_for(curve.rows.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const std::size_t n = n_min + j;
            const DistanceProfile p = embedded_profile(rs, n, opts, 1);
            curve.rows[j] = RhoCurveRow{n, rho1(p), rho2(p), p.size()};
        }
    });
    return curve;
}

ScatterPoint scatter_point(const ReturnSeries& rs, std::size_t n, const CurveOptions& opts) {
    const DistanceProfile p = embedded_profile(rs, n, opts, opts.threads);
    return ScatterPoint{rs.label, rho2(p), rho1(p)};
}

void write_curve_csv(std::ostream& out, const RhoCurve& curve) {
    out << "n,rho1,rho2,windows\n";
    for (const auto& r : curve.rows)
        out << r.n << ',' << format_double(r.rho1) << ',' << format_double(r.rho2) << ',' << r.windows << '\n';
}

void write_scatter_csv(std::ostream& out, const std::vector<ScatterPoint>& points) {
    out << "label,rho2,rho1\n";
    for (const auto& p : points)
        out << p.label << ',' << format_double(p.rho2) << ',' << format_double(p.rho1) << '\n';
}

}  // namespace slide
