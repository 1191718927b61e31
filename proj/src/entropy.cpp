#include "slidestats/entropy.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>

#include "slidestats/error.hpp"
#include "slidestats/summation.hpp"

namespace slide {

namespace {

double xlogx(double v) { return v > 0 ? v * std::log(v) : 0.0; }

double profile_mean(const DistanceProfile& p) {
    return compensated_sum(p.values()) / static_cast<double>(p.size());
}

// Integrates g over the domain, splitting an infinite domain at lower + 1 so
// that each half gets a double-exponential rule clustering at its singular end.
double integrate(const std::function<double(double)>& g, Interval domain, double tol) {
    if (!(domain.lower >= 0) || !(domain.upper > domain.lower))
        throw Error(ErrorCode::InvalidArgument, "quadrature domain must satisfy 0 <= lower < upper");

    constexpr double kInnerTolerance = 1e-13;
    double total = 0;
    double error_bound = 0;
    auto accumulate = [&](double value, double err) {
        if (!std::isfinite(value) || !std::isfinite(err))
            throw Error(ErrorCode::QuadratureNoConvergence, "integrand produced non-finite values");
        total += value;
        error_bound += err;
    };

    try {
        boost::math::quadrature::tanh_sinh<double> finite_rule;
        if (std::isfinite(domain.upper)) {
            double err = 0;
            const double v = finite_rule.integrate(g, domain.lower, domain.upper, kInnerTolerance, &err);
            accumulate(v, err);
        } else {
            const double split = domain.lower + 1.0;
            double err = 0;
            const double head = finite_rule.integrate(g, domain.lower, split, kInnerTolerance, &err);
            accumulate(head, err);
            boost::math::quadrature::exp_sinh<double> tail_rule;
            const double tail = tail_rule.integrate(
                [&](double x) { return g(x); }, split, std::numeric_limits<double>::infinity(),
                kInnerTolerance, &err);
            accumulate(tail, err);
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::QuadratureNoConvergence, e.what());
    }

    if (error_bound > tol)
        throw Error(ErrorCode::QuadratureNoConvergence,
                    "error estimate " + std::to_string(error_bound) + " exceeds tolerance");
    return total;
}

}  // namespace

StepDensity::StepDensity(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.size() != values.size() || values.empty())
        throw Error(ErrorCode::InvalidArgument, "step density needs one value per breakpoint");
    double left = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double right = breakpoints[i];
        const double v = values[i];
        if (!std::isfinite(right) || !std::isfinite(v) || v <= 0)
            throw Error(ErrorCode::InvalidArgument, "step density pieces need finite positive values");
        if (right < left)
            throw Error(ErrorCode::InvalidArgument, "step density breakpoints must be non-decreasing");
        if (right == left) continue;
        if (!value_.empty()) {
            if (v > value_.back())
                throw Error(ErrorCode::InvalidArgument, "step density values must be decreasing");
            if (v == value_.back()) {
                right_.back() = right;
                left = right;
                continue;
            }
        }
        right_.push_back(right);
        value_.push_back(v);
        left = right;
    }
    if (value_.empty()) throw Error(ErrorCode::InvalidArgument, "step density has empty support");
}

double StepDensity::mass() const {
    CompensatedSum<double> m;
    double left = 0;
    for (std::size_t i = 0; i < value_.size(); ++i) {
        m += value_[i] * (right_[i] - left);
        left = right_[i];
    }
    return m.value();
}

bool StepDensity::normalized(double tol) const { return std::abs(mass() - 1.0) <= tol; }

StepDensity StepDensity::dilated(double lambda) const {
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive and finite");
    std::vector<double> b(right_), v(value_);
    for (double& x : b) x *= lambda;
    for (double& x : v) x /= lambda;
    return StepDensity(std::move(b), std::move(v));
}

StepDensity corner_density(const DistanceProfile& p) {
    const std::size_t n = p.size();
    const double mu = profile_mean(p);
    std::vector<double> b(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = static_cast<double>(i + 1) / static_cast<double>(n);
        v[i] = p[i] / mu;
    }
    return StepDensity(std::move(b), std::move(v));
}

StepDensity complement_ecdf_density(const DistanceProfile& p) {
    const std::size_t n = p.size();
    const double mu = profile_mean(p);
    // Distinct normalised values e_1 > ... > e_m and t_j = #{d >= e_j} / n.
    std::vector<double> e, t;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = p[i] / mu;
        const double frac = static_cast<double>(i + 1) / static_cast<double>(n);
        if (!e.empty() && e.back() == v)
            t.back() = frac;
        else {
            e.push_back(v);
            t.push_back(frac);
        }
    }
    // 1 - L_{D*} equals t_j on [e_{j+1}, e_j); list the pieces left to right.
    std::vector<double> b(e.rbegin(), e.rend());
    std::vector<double> v(t.rbegin(), t.rend());
    return StepDensity(std::move(b), std::move(v));
}

double genial_entropy_step(const StepDensity& s) {
    const double mass = s.mass();
    if (std::abs(mass - 1.0) > 1e-12)
        throw Error(ErrorCode::NotNormalized, "step density mass is " + std::to_string(mass));
    // On a constant piece C over [u, v]:
    //   -int C (1 + ln(x C)) dx = (C u) ln(C u) - (C v) ln(C v).
    CompensatedSum<double> g;
    g += mass - 1.0;
    double left = 0;
    const auto b = s.breakpoints();
    const auto v = s.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        g += xlogx(v[i] * left) - xlogx(v[i] * b[i]);
        left = b[i];
    }
    return g.value();
}

double genial_entropy_complement_ecdf(const DistanceProfile& p) {
    return genial_entropy_step(complement_ecdf_density(p));
}

double genial_entropy_quadrature(const std::function<double(double)>& density, Interval domain,
                                 double tol) {
    auto integrand = [&](double x) {
        const double f = density(x);
        if (f <= 0) return 0.0;
        return f * (std::log(x) + std::log(f));
    };
    return -1.0 - integrate(integrand, domain, tol);
}

double differential_entropy_quadrature(const std::function<double(double)>& density, Interval domain,
                                       double tol) {
    auto integrand = [&](double x) {
        const double f = density(x);
        return f > 0 ? -f * std::log(f) : 0.0;
    };
    return integrate(integrand, domain, tol);
}

double expected_log_quadrature(const std::function<double(double)>& density, Interval domain,
                               double tol) {
    auto integrand = [&](double x) {
        const double f = density(x);
        return f > 0 ? f * std::log(x) : 0.0;
    };
    return integrate(integrand, domain, tol);
}

}  // namespace slide
