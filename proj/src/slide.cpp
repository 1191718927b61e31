#include "slidestats/slide.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "slidestats/error.hpp"
#include "slidestats/summation.hpp"

namespace slide {

namespace {

using Acc = CompensatedSum<long double>;

template <class Real>
std::vector<Real> centered_logs(const DistanceProfile& p) {
    const auto d = p.values();
    std::vector<Real> c(d.size());
    CompensatedSum<Real> total;
    for (std::size_t i = 0; i < d.size(); ++i) {
        c[i] = std::log(static_cast<Real>(d[i]));
        total += c[i];
    }
    const Real mean = total.value() / static_cast<Real>(d.size());
    for (Real& x : c) x -= mean;
    return c;
}

template <class Real>
Real slide_function_impl(const DistanceProfile& p, Real t) {
    if (!(t >= 0) || !std::isfinite(static_cast<double>(t)))
        throw Error(ErrorCode::InvalidArgument, "slide function needs a finite t >= 0");
    if (t == 0) return 0;

    const std::size_t n = p.size();
    const std::vector<Real> c = centered_logs<Real>(p);

    // Exponents t*c_i relative to the geometric mean; shifting by the largest
    // one keeps every exp() in [0, 1].
    std::vector<Real> x(n);
    Real shift = -std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = t * c[i];
        if (!std::isfinite(static_cast<double>(x[i])))
            throw Error(ErrorCode::Overflow, "t * log(d_i) is not representable; rescale the profile");
        shift = std::max(shift, x[i]);
    }
    CompensatedSum<Real> mass;
    std::vector<Real> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(x[i] - shift);
        mass += w[i];
    }
    const Real total = mass.value();
    const Real nn = static_cast<Real>(n);
    // ln a_i where a_i = n d_i^t / sum_j d_j^t
    const Real log_norm = shift + std::log(total / nn);

    // With w_i = a_i / n the piecewise genial entropy telescopes to
    //   sigma = -sum_i w_i (i ln i - (i-1) ln(i-1) - ln n + ln a_i).
    CompensatedSum<Real> sigma;
    for (std::size_t k = 0; k < n; ++k) {
        const Real i = static_cast<Real>(k + 1);
        Real g = std::log(i / nn);
        if (k > 0) g += (i - 1) * std::log1p(1 / (i - 1));
        const Real log_a = x[k] - log_norm;
        sigma += -(w[k] / total) * (g + log_a);
    }
    return sigma.value();
}

double log_spread(const DistanceProfile& p) {
    const auto d = p.values();
    return std::log(d.front()) - std::log(d.back());
}

double richardson(const std::vector<double>& first_column, const char* what) {
    // first_column[j] is the estimate at step h / 2^j; its error expands in
    // integer powers of h, so column k eliminates the h^k term.
    const std::size_t levels = first_column.size();
    std::vector<std::vector<double>> table(levels);
    for (std::size_t j = 0; j < levels; ++j) {
        table[j].resize(j + 1);
        table[j][0] = first_column[j];
        for (std::size_t k = 1; k <= j; ++k) {
            const double factor = std::ldexp(1.0, static_cast<int>(k));
            table[j][k] = (factor * table[j][k - 1] - table[j - 1][k - 1]) / (factor - 1);
        }
    }
    const double estimate = table[levels - 1][levels - 1];
    if (!std::isfinite(estimate))
        throw Error(ErrorCode::OracleUnstable, std::string(what) + ": non-finite Richardson estimate");
    if (levels >= 3) {
        const double last = std::abs(table[levels - 1][levels - 1] - table[levels - 2][levels - 2]);
        const double prev = std::abs(table[levels - 2][levels - 2] - table[levels - 3][levels - 3]);
        if (last > prev && last > 1e-6 * std::max(1.0, std::abs(estimate)))
            throw Error(ErrorCode::OracleUnstable, std::string(what) + ": Richardson levels diverge");
    }
    return estimate;
}

double oracle_step(const DistanceProfile& p, const FiniteDifferenceOptions& opts) {
    if (!(opts.base_step > 0) || opts.levels < 1)
        throw Error(ErrorCode::InvalidArgument, "finite-difference oracle needs base_step > 0 and levels >= 1");
    return opts.base_step / std::max(1.0, log_spread(p));
}

}  // namespace

double rho1(const DistanceProfile& p) {
    const auto d = p.values();
    const std::size_t n = d.size();
    const long double nn = static_cast<long double>(n);

    Acc shape;
    for (std::size_t k = 1; k + 1 < n; ++k) {  // i = k + 1 runs over 2..n-1
        const long double i = static_cast<long double>(k + 1);
        shape += i * std::log(i) * std::log(static_cast<long double>(d[k + 1]) / d[k]);
    }
    Acc tail;
    for (std::size_t k = 0; k + 1 < n; ++k)
        tail += std::log(static_cast<long double>(d[k]) / d[n - 1]);

    return static_cast<double>(shape.value() / nn + std::log(nn) / nn * tail.value());
}

double rho2(const DistanceProfile& p) {
    const std::size_t n = p.size();
    const long double nn = static_cast<long double>(n);
    // The formula is invariant under a common shift of the logs; centring
    // keeps S1 near zero and the big terms small.
    const std::vector<long double> c = centered_logs<long double>(p);

    Acc s1, s2, s3;
    for (std::size_t k = 0; k < n; ++k) {
        s1 += c[k];
        s2 += c[k] * c[k];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const long double r = c[k] - c[n - 1];
        s3 += r * r;
    }
    const long double S1 = s1.value();
    const long double S2 = s2.value();
    const long double S3 = s3.value();

    Acc shape;
    for (std::size_t k = 1; k + 1 < n; ++k) {  // i = 1 contributes 1 ln 1 = 0
        const long double i = static_cast<long double>(k + 1);
        shape += i * std::log(i) * (c[k + 1] - c[k]) * (2 * S1 - nn * (c[k] + c[k + 1]));
    }
    const long double tail = S1 - nn * c[n - 1];
    const long double bracket =
        shape.value() + std::log(nn) * (2 * tail * tail - nn * S3) + (nn * S2 - S1 * S1);
    return static_cast<double>(-bracket / (nn * nn));
}

double slide_function_step(const DistanceProfile& p, double t) {
    return static_cast<double>(slide_function_impl<long double>(p, t));
}

long double slide_function_step_extended(const DistanceProfile& p, long double t) {
    return slide_function_impl<long double>(p, t);
}

double rho1_fd(const DistanceProfile& p, const FiniteDifferenceOptions& opts) {
    const double h0 = oracle_step(p, opts);
    std::vector<double> column(static_cast<std::size_t>(opts.levels));
    for (std::size_t j = 0; j < column.size(); ++j) {
        const long double h = std::ldexp(static_cast<long double>(h0), -static_cast<int>(j));
        column[j] = static_cast<double>(slide_function_step_extended(p, h) / h);
    }
    return richardson(column, "rho1_fd");
}

double rho2_fd(const DistanceProfile& p, const FiniteDifferenceOptions& opts) {
    const double h0 = oracle_step(p, opts);
    std::vector<double> column(static_cast<std::size_t>(opts.levels));
    for (std::size_t j = 0; j < column.size(); ++j) {
        const long double h = std::ldexp(static_cast<long double>(h0), -static_cast<int>(j));
        const long double s1 = slide_function_step_extended(p, h);
        const long double s2 = slide_function_step_extended(p, 2 * h);
        column[j] = static_cast<double>((s2 - 2 * s1) / (h * h));
    }
    return richardson(column, "rho2_fd");
}

SlideEstimate estimate(const DistanceProfile& p, std::string provenance) {
    return SlideEstimate{rho1(p), rho2(p), p.size(), std::move(provenance)};
}

}  // namespace slide
