#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slidestats/nn.hpp"
#include "slidestats/point_cloud.hpp"

namespace slide {

struct ReturnSeries {
    std::vector<double> u;
    std::string label;
};

/// u_i = ln(x_{i+1} / x_i). Needs at least 2 positive prices.
ReturnSeries log_returns(const std::vector<double>& prices, std::string label = {});

/// Overlapping windows (u_i, ..., u_{i+n-1}) as points in R^n. Without
/// `windows` every maximal window is used (length - n + 1 of them).
/// Throws SeriesTooShort.
PointCloud delay_embed(const ReturnSeries& rs, std::size_t n, std::optional<std::size_t> windows = {});

struct RhoCurveRow {
    std::size_t n;
    double rho1;
    double rho2;
    std::size_t windows;
};

struct RhoCurve {
    std::string label;
    std::vector<RhoCurveRow> rows;
};

struct CurveOptions {
    std::optional<std::size_t> windows;
    NnEngine engine = NnEngine::Auto;
    std::size_t threads = 1;
};

/// rho1/rho2 of the embedding at every depth in [n_min, n_max], rows in
/// increasing n. Depths are evaluated concurrently.
RhoCurve rho_curve(const ReturnSeries& rs, std::size_t n_min, std::size_t n_max, const CurveOptions& opts = {});

struct ScatterPoint {
    std::string label;
    double rho2;
    double rho1;
};

/// (rho2, rho1) of the depth-n embedding.
ScatterPoint scatter_point(const ReturnSeries& rs, std::size_t n = 3, const CurveOptions& opts = {});

/// Header n,rho1,rho2,windows.
void write_curve_csv(std::ostream& out, const RhoCurve& curve);
/// Header label,rho2,rho1.
void write_scatter_csv(std::ostream& out, const std::vector<ScatterPoint>& points);

}  // namespace slide
