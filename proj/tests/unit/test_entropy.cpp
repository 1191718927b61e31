#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slidestats/entropy.hpp"
#include "slidestats/error.hpp"
#include "slidestats/profile.hpp"

using namespace slide;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double gamma_e = std::numbers::egamma;

struct Row {
    const char* name;
    std::function<double(double)> f;
    Interval domain;
    double expected;
};

std::vector<Row> analytic_rows() {
    const double b = 2.5;
    const double a = 0.5;
    return {
        {"1/b", [b](double) { return 1.0 / b; }, {0.0, b}, 0.0},
        {"-ln x", [](double x) { return -std::log(x); }, {0.0, 1.0}, gamma_e},
        {"exp(-x)", [](double x) { return std::exp(-x); }, {}, gamma_e},
        {"a/x^(1-a)", [a](double x) { return a / std::pow(x, 1 - a); }, {0.0, 1.0}, -std::log(a)},
        {"half-normal", [](double x) { return std::sqrt(2 / pi) * std::exp(-x * x / 2); }, {},
         (-1 + gamma_e + std::log(pi)) / 2},
        {"2/(pi(1+x^2))", [](double x) { return 2 / (pi * (1 + x * x)); }, {}, -1 + std::log(2.0) + std::log(pi)},
    };
}

}  // namespace

TEST_CASE("analytic genial entropies by quadrature") {
    for (const auto& row : analytic_rows()) {
        CAPTURE(row.name);
        CHECK(std::abs(genial_entropy_quadrature(row.f, row.domain) - row.expected) <= 1e-6);
    }
}

TEST_CASE("differential entropy bound") {
    for (const auto& row : analytic_rows()) {
        CAPTURE(row.name);
        const double h = differential_entropy_quadrature(row.f, row.domain);
        const double elog = expected_log_quadrature(row.f, row.domain);
        CHECK(h - 1 - elog >= -1e-6);
        CHECK(h - 1 - elog == doctest::Approx(row.expected).epsilon(1e-6));
    }
}

TEST_CASE("step density basics") {
    const StepDensity unit({1.0}, {1.0});
    CHECK(unit.mass() == 1.0);
    CHECK(genial_entropy_step(unit) == doctest::Approx(0.0));

    CHECK_THROWS_AS(StepDensity({1.0, 2.0}, {0.5, 1.0}), Error);    // increasing
    CHECK_THROWS_AS(genial_entropy_step(StepDensity({1.0}, {0.5})), Error);  // mass 1/2

    const StepDensity s({0.5, 1.5}, {1.5, 0.25});
    REQUIRE(s.normalized());
    for (double lambda : {0.01, 0.7, 3.0, 250.0})
        CHECK(std::abs(genial_entropy_step(s.dilated(lambda)) - genial_entropy_step(s)) <= 1e-12);
}

TEST_CASE("complement ECDF has the same entropy as the profile density") {
    const double e = std::numbers::e;
    const auto two = make_profile({e, 1.0});
    const double v = genial_entropy_step(corner_density(two));
    CHECK(v > 0);
    CHECK(std::abs(genial_entropy_complement_ecdf(two) - v) <= 1e-9);

    const auto three = make_profile({e * e, e, 1.0});
    CHECK(std::abs(genial_entropy_complement_ecdf(three) - genial_entropy_step(corner_density(three))) <= 1e-9);

    const auto flat = make_profile({3.0, 3.0, 3.0});
    CHECK(std::abs(genial_entropy_complement_ecdf(flat)) <= 1e-12);
    CHECK(std::abs(genial_entropy_step(corner_density(flat))) <= 1e-12);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> size(2, 60);
    for (int k = 0; k < 100; ++k) {
        std::vector<double> d(static_cast<std::size_t>(size(rng)));
        for (double& x : d) x = std::exp(u(rng));
        const auto p = make_profile(d);
        const double g = genial_entropy_step(corner_density(p));
        CHECK(g >= -1e-12);
        CHECK(std::abs(genial_entropy_complement_ecdf(p) - g) <= 1e-9);
    }
}

TEST_CASE("corner density of a profile is normalized and decreasing") {
    const auto p = make_profile({4.0, 2.0, 2.0, 1.0});
    const StepDensity s = corner_density(p);
    CHECK(s.normalized());
    for (std::size_t i = 1; i < s.pieces(); ++i) CHECK(s.values()[i] <= s.values()[i - 1]);
    CHECK(complement_ecdf_density(p).normalized());
}
