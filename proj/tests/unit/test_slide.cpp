#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slidestats/error.hpp"
#include "slidestats/profile.hpp"
#include "slidestats/slide.hpp"
#include "slidestats/summation.hpp"

using namespace slide;

namespace {

const double e = std::numbers::e;

DistanceProfile random_profile(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> d(n);
    for (double& x : d) x = std::exp(u(rng));
    return make_profile(d);
}

}  // namespace

TEST_CASE("profile validation and ordering") {
    const auto p = make_profile({1.0, 3.0, 2.0});
    CHECK(p.size() == 3);
    CHECK(p[0] == 3.0);
    CHECK(p[2] == 1.0);

    auto code_of = [](std::vector<double> d) {
        try {
            make_profile(std::move(d));
        } catch (const Error& err) {
            return err.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of({1.0}) == ErrorCode::TooFewPoints);
    CHECK(code_of({1.0, 0.0}) == ErrorCode::NonPositiveDistance);
    CHECK(code_of({1.0, -2.0}) == ErrorCode::NonPositiveDistance);
    CHECK_THROWS_AS(make_profile({1.0, std::nan("")}), Error);
    CHECK_THROWS_AS(make_profile({1.0, INFINITY}), Error);
}

TEST_CASE("compensated sum keeps small terms") {
    CompensatedSum<double> s;
    s += 1.0;
    for (int i = 0; i < 1000; ++i) s += 1e-16;
    s += -1.0;
    CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-6));
}

TEST_CASE("hand values") {
    const auto two = make_profile({e, 1.0});
    CHECK(std::abs(rho1(two) - std::log(2.0) / 2) <= 1e-12);
    CHECK(std::abs(rho2(two) + 0.25) <= 1e-12);

    const auto three = make_profile({e * e, e, 1.0});
    CHECK(std::abs(rho1(three) - (std::log(3.0) - 2.0 / 3.0 * std::log(2.0))) <= 1e-12);

    // the oracles agree with the hand values
    CHECK(rho1_fd(two) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-8));
    CHECK(rho2_fd(two) == doctest::Approx(-0.25).epsilon(1e-6));
    CHECK(rho1_fd(three) == doctest::Approx(std::log(3.0) - 2.0 / 3.0 * std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("constant profiles") {
    for (double c : {1e-3, 1.0, 7.5}) {
        const auto p = make_profile({c, c, c, c});
        CHECK(std::abs(rho1(p)) <= 1e-12);
        CHECK(std::abs(rho2(p)) <= 1e-12);
        CHECK(std::abs(rho1_fd(p)) <= 1e-12);
        CHECK(std::abs(rho2_fd(p)) <= 1e-12);
        CHECK(std::abs(slide_function_step(p, 0.7)) <= 1e-14);
    }
}

TEST_CASE("slide function") {
    const auto two = make_profile({e, 1.0});
    CHECK(slide_function_step(two, 0.0) == 0.0);
    CHECK(slide_function_step(two, 1e-6) == doctest::Approx(1e-6 * std::log(2.0) / 2).epsilon(1e-5));
    CHECK_THROWS_AS(slide_function_step(two, -1.0), Error);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto p = random_profile(rng, 2 + k % 40);
        for (double t = 0; t <= 4.0; t += 0.25) CHECK(slide_function_step(p, t) >= -1e-12);
    }
}

TEST_CASE("large t does not overflow") {
    const auto p = make_profile({1e150, 1e-150, 1.0});
    const double s = slide_function_step(p, 2.0);
    CHECK(std::isfinite(s));
    CHECK(s >= 0);
}

TEST_CASE("oracle agreement over random profiles") {
    std::mt19937_64 rng(2024);
    for (std::size_t n : {2, 3, 5, 10, 100}) {
        for (int k = 0; k < 100; ++k) {
            const auto p = random_profile(rng, n);
            const double r1 = rho1(p), r2 = rho2(p);
            CHECK(std::abs(r1 - rho1_fd(p)) <= 1e-8 * std::max(1.0, std::abs(r1)));
            CHECK(std::abs(r2 - rho2_fd(p)) <= 1e-5 * std::max(1.0, std::abs(r2)));
        }
    }
}

TEST_CASE("scale invariance, power law, nonnegativity") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(2, 200);
    for (int k = 0; k < 100; ++k) {
        const auto p = random_profile(rng, size(rng));
        const double r1 = rho1(p), r2 = rho2(p);
        CHECK(r1 >= -1e-9);
        for (double lambda : {1e-4, 0.3, 17.0, 1e5}) {
            const auto q = p.scaled(lambda);
            CHECK(std::abs(rho1(q) - r1) <= 1e-10);
            CHECK(std::abs(rho2(q) - r2) <= 1e-10);
        }
        for (double r : {0.5, 2.0, 3.0}) {
            const auto q = p.powered(r);
            CHECK(std::abs(rho1(q) - r * r1) <= 1e-9);
            CHECK(std::abs(rho2(q) - r * r * r2) <= 1e-9);
        }
    }
}

TEST_CASE("ties are allowed") {
    const auto p = make_profile({2.0, 2.0, 1.0, 1.0, 0.5});
    CHECK(std::abs(rho1(p) - rho1_fd(p)) <= 1e-8);
    CHECK(std::abs(rho2(p) - rho2_fd(p)) <= 1e-5);
}

TEST_CASE("estimate bundles both statistics") {
    const auto p = make_profile({e, 1.0});
    const auto est = estimate(p, "hand");
    CHECK(est.n == 2);
    CHECK(est.rho1 == rho1(p));
    CHECK(est.rho2 == rho2(p));
    CHECK(est.provenance == "hand");
}
