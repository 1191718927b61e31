// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: slidestats_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "slidestats/csv.hpp"
#include "slidestats/entropy.hpp"
#include "slidestats/generators.hpp"
#include "slidestats/harness.hpp"
#include "slidestats/nn.hpp"
#include "slidestats/profile.hpp"
#include "slidestats/reference.hpp"
#include "slidestats/returns.hpp"
#include "slidestats/rng.hpp"
#include "slidestats/slide.hpp"

using namespace slide;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double gamma_e = std::numbers::egamma;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string fmt(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

DistanceProfile random_profile(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> d(n);
    for (double& x : d) x = std::exp(u(rng));
    return make_profile(d);
}

void formula_vs_oracle(Verdict& v) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1);
    double worst1 = 0, worst2 = 0;
    int count = 0;
    for (std::size_t n : {2, 3, 5, 10, 100, 1000}) {
        for (int k = 0; k < 100; ++k, ++count) {
            const auto p = random_profile(rng, n);
            const double r1 = rho1(p), r2 = rho2(p);
            worst1 = std::max(worst1, std::abs(r1 - rho1_fd(p)) / std::max(1.0, std::abs(r1)));
            worst2 = std::max(worst2, std::abs(r2 - rho2_fd(p)) / std::max(1.0, std::abs(r2)));
        }
    }
    const double secs = seconds_since(t0);
    v.detail << count << " profiles, max rel err rho1 " << fmt(worst1, 3) << ", rho2 " << fmt(worst2, 3) << ", "
             << fmt(secs, 3) << " s";
    v.require(count >= 500, "at least 500 profiles");
    v.require(worst1 <= 1e-8, "rho1 within 1e-8");
    v.require(worst2 <= 1e-5, "rho2 within 1e-5");
    v.require(secs < 10, "runtime < 10 s");
}

void exact_identities(Verdict& v) {
    double constant = 0, scale = 0, power = 0, min_rho1 = INFINITY;
    for (double c : {1e-6, 0.5, 1.0, 42.0})
        for (std::size_t n : {2, 3, 17, 1000}) {
            const auto p = make_profile(std::vector<double>(n, c));
            constant = std::max({constant, std::abs(rho1(p)), std::abs(rho2(p))});
        }
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> size(2, 500);
    for (int k = 0; k < 200; ++k) {
        const auto p = random_profile(rng, size(rng));
        const double r1 = rho1(p), r2 = rho2(p);
        min_rho1 = std::min(min_rho1, r1);
        for (double lambda : {1e-5, 0.01, 3.0, 1e6}) {
            const auto q = p.scaled(lambda);
            scale = std::max({scale, std::abs(rho1(q) - r1), std::abs(rho2(q) - r2)});
        }
        for (double r : {0.25, 0.5, 2.0, 3.0}) {
            const auto q = p.powered(r);
            power = std::max({power, std::abs(rho1(q) - r * r1), std::abs(rho2(q) - r * r * r2)});
        }
    }
    v.detail << "constant " << fmt(constant, 3) << ", scale " << fmt(scale, 3) << ", power " << fmt(power, 3)
             << ", min rho1 " << fmt(min_rho1, 4);
    v.require(constant <= 1e-12, "constant profiles");
    v.require(scale <= 1e-10, "scale invariance");
    v.require(power <= 1e-9, "power law");
    v.require(min_rho1 >= -1e-9, "rho1 nonnegative");
}

void hand_values(Verdict& v) {
    const double e = std::numbers::e;
    const auto two = make_profile({e, 1.0});
    const auto three = make_profile({e * e, e, 1.0});
    const double a = std::abs(rho1(two) - std::log(2.0) / 2);
    const double b = std::abs(rho2(two) + 0.25);
    const double c = std::abs(rho1(three) - (std::log(3.0) - 2.0 / 3.0 * std::log(2.0)));
    const double fd = std::max({std::abs(rho1_fd(two) - std::log(2.0) / 2), std::abs(rho2_fd(two) + 0.25),
                                std::abs(rho1_fd(three) - (std::log(3.0) - 2.0 / 3.0 * std::log(2.0)))});
    v.detail << "errors " << fmt(a, 3) << ", " << fmt(b, 3) << ", " << fmt(c, 3) << "; oracle " << fmt(fd, 3);
    v.require(a <= 1e-12 && b <= 1e-12 && c <= 1e-12, "within 1e-12");
    v.require(fd <= 1e-6, "oracle confirms");
}

void genial_entropy(Verdict& v) {
    const double b = 2.5, a = 0.5;
    struct Row {
        std::function<double(double)> f;
        Interval domain;
        double expected;
    };
    const Row rows[] = {
        {[b](double) { return 1.0 / b; }, {0.0, b}, 0.0},
        {[](double x) { return -std::log(x); }, {0.0, 1.0}, gamma_e},
        {[](double x) { return std::exp(-x); }, {}, gamma_e},
        {[a](double x) { return a / std::pow(x, 1 - a); }, {0.0, 1.0}, -std::log(a)},
        {[](double x) { return std::sqrt(2 / pi) * std::exp(-x * x / 2); }, {}, (-1 + gamma_e + std::log(pi)) / 2},
        {[](double x) { return 2 / (pi * (1 + x * x)); }, {}, -1 + std::log(2.0) + std::log(pi)},
    };
    double quad = 0;
    for (const auto& r : rows) quad = std::max(quad, std::abs(genial_entropy_quadrature(r.f, r.domain) - r.expected));

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> size(2, 200);
    double duality = 0;
    for (int k = 0; k < 100; ++k) {
        const auto p = random_profile(rng, size(rng));
        duality = std::max(duality, std::abs(genial_entropy_step(corner_density(p)) - genial_entropy_complement_ecdf(p)));
    }
    v.detail << "6 rows max err " << fmt(quad, 3) << "; duality over 100 profiles " << fmt(duality, 3);
    v.require(quad <= 1e-6, "quadrature within 1e-6");
    v.require(duality <= 1e-9, "duality within 1e-9");
}

void reference_function(Verdict& v) {
    const double s0 = log_slide_reference(0.0);
    const double s1 = log_slide_reference(1.0);
    const double h = 1e-4;
    const double f1 = log_slide_reference(h), f2 = log_slide_reference(2 * h), f3 = log_slide_reference(3 * h);
    const double d1 = (-3 * s0 + 4 * f1 - f2) / (2 * h);
    const double d2 = (2 * s0 - 5 * f1 + 4 * f2 - f3) / (h * h);
    v.detail << "sigma(0) " << fmt(s0, 3) << ", sigma(1)-gamma " << fmt(s1 - gamma_e, 3) << ", slope " << fmt(d1, 10)
             << ", curvature " << fmt(d2, 10);
    v.require(std::abs(s0) <= 1e-10 && std::abs(s1 - gamma_e) <= 1e-10, "values");
    v.require(std::abs(d1 - 1) <= 1e-5, "first derivative");
    v.require(std::abs(d2 + pi * pi / 6) <= 1e-5, "second derivative");
}

void table_replication(Verdict& v) {
    const auto t0 = Clock::now();
    RunOptions run;
    run.threads = 0;
    const auto rows = standard_rows();
    const auto s = table_run(rows, 10000, 100, 20260101, run);
    const double secs = seconds_since(t0);
    auto by = [&](const std::string& label) -> const ExperimentSummary& {
        for (const auto& r : s)
            if (r.spec.label() == label) return r;
        throw std::runtime_error("missing row " + label);
    };
    const auto& uni = by("uniform-cube(1)");
    const auto& nor = by("normal");
    const auto& ex = by("exponential");
    const auto& can = by("cantor");
    const auto& tri = by("sierpinski");

    v.detail << "uniform mu1 " << fmt(uni.mu1) << " mu2 " << fmt(uni.mu2) << "; normal " << fmt(nor.mu1) << ", "
             << fmt(nor.mu2) << "; exponential mu1 " << fmt(ex.mu1) << "; cubes 1/mu1";
    v.require(within(uni.mu1, 1.0003, 0.005), "uniform mu1");
    v.require(within(uni.mu2, -1.645, 0.03), "uniform mu2");
    v.require(within(nor.mu1, 1.2664, 0.05), "normal mu1");
    v.require(within(nor.mu2, -1.0, 0.07), "normal mu2");
    v.require(within(ex.mu1, 1.459, 0.01), "exponential mu1");
    for (int m = 1; m <= 4; ++m) {
        const auto& c = by("uniform-cube(" + std::to_string(m) + ")");
        v.detail << ' ' << fmt(c.dim_est1(), 4) << '/' << fmt(c.dim_est2(), 4);
        v.require(std::abs(c.dim_est1() - m) <= 0.03 * m, "cube " + std::to_string(m) + " 1/mu1");
        v.require(std::abs(c.dim_est2() - m) <= 0.02 * m, "cube " + std::to_string(m) + " rho2 dimension");
    }
    const double cantor_dim = std::log(2.0) / std::log(3.0);
    v.detail << "; cantor mu1 " << fmt(can.mu1) << " (dim " << fmt(can.dim_est1(), 4) << "); sierpinski mu2 "
             << fmt(tri.mu2) << "; " << fmt(secs, 3) << " s";
    v.require(within(can.mu1, 1.60, 0.03), "cantor mu1");
    v.require(std::abs(can.dim_est1() - cantor_dim) <= 0.03 * cantor_dim, "cantor dimension");
    v.require(within(tri.mu2, -0.655, 0.03), "sierpinski mu2");
    v.require(secs < 900, "runtime < 15 min");
}

void cos_walk_value(Verdict& v) {
    const auto t0 = Clock::now();
    const double r = rho1(nn_distances_1d(cos_walk(20000).coordinates()));
    const double secs = seconds_since(t0);
    v.detail << "rho1 " << fmt(r) << ", " << fmt(secs, 3) << " s";
    v.require(within(r, 0.53, 0.02), "0.53 +- 0.02");
    v.require(secs < 1, "runtime < 1 s");
}

void cauchy_sign(Verdict& v) {
    SourceSpec spec;
    spec.kind = SourceKind::Cauchy;
    RunOptions run;
    run.threads = 0;
    const auto values = replicate_values(spec, 10000, 100, 31337, run);
    const auto positive = std::count_if(values.begin(), values.end(), [](const SlideEstimate& e) { return e.rho2 > 0; });
    v.detail << positive << "/100 replicates with rho2 > 0";
    v.require(positive >= 95, ">= 95 positive");
}

void normality_calibration(Verdict& v) {
    const auto t0 = Clock::now();
    const std::size_t trials = 400;
    std::size_t rejected = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Stream rng(derive_seed(777, t), 0);
        std::vector<double> data(500);
        for (double& x : data) x = rng.normal();
        NormalityOptions opts;
        opts.reps = 500;
        opts.seed = derive_seed(555, t);
        opts.alpha = 0.05;
        opts.threads = 0;
        if (normality_test(data, opts).reject) ++rejected;
    }
    const double rate = static_cast<double>(rejected) / trials;

    SourceSpec cauchy;
    cauchy.kind = SourceKind::Cauchy;
    cauchy.size = 10000;
    cauchy.seed = 2718;
    NormalityOptions strict;
    strict.reps = 500;
    strict.seed = 99;
    strict.alpha = 0.01;
    strict.threads = 0;
    const auto rc = normality_test(sample(cauchy).coordinates(), strict);
    v.detail << "null rejection rate " << fmt(rate, 4) << " (" << rejected << "/" << trials << "); cauchy p "
             << fmt(rc.p_value, 3) << "; " << fmt(seconds_since(t0), 3) << " s";
    v.require(rate >= 0.03 && rate <= 0.07, "rate in [0.03, 0.07]");
    v.require(rc.reject, "cauchy rejected at 0.01");
}

ReturnSeries synthetic_returns(SourceKind kind, std::size_t k, std::uint64_t seed) {
    SourceSpec s;
    s.kind = kind;
    s.size = k;
    s.seed = seed;
    const auto pc = sample(s);
    return {{pc.coordinates().begin(), pc.coordinates().end()}, std::string(to_string(kind))};
}

void returns_pipeline(Verdict& v) {
    // user-style CSV with a header and a date column
    const auto path = std::filesystem::temp_directory_path() / "slidestats-acceptance-prices.csv";
    {
        std::ofstream out(path);
        out << "date,close\n";
        Stream rng(4242, 0);
        double p = 1000;
        for (int i = 0; i < 5000; ++i) {
            out << "d" << i << ',' << format_double(p) << '\n';
            p *= std::exp(0.01 * rng.normal());
        }
    }
    CurveOptions opts;
    opts.threads = 0;
    const auto t0 = Clock::now();
    const auto curve = rho_curve(log_returns(load_prices_file(path.string()), "csv"), 2, 30, opts);
    const double secs = seconds_since(t0);
    std::filesystem::remove(path);
    bool complete = curve.rows.size() == 29;
    for (const auto& r : curve.rows) complete = complete && std::isfinite(r.rho1) && std::isfinite(r.rho2);

    // replicate bands of normal vs Laplace curves at each depth
    const int seeds = 5;
    std::vector<RhoCurve> normal, laplace;
    for (int s = 0; s < seeds; ++s) {
        normal.push_back(rho_curve(synthetic_returns(SourceKind::Normal, 5000, 100 + s), 2, 30, opts));
        laplace.push_back(rho_curve(synthetic_returns(SourceKind::Laplace, 5000, 200 + s), 2, 30, opts));
    }
    std::size_t separated = 0;
    double tightest = INFINITY;
    for (std::size_t i = 0; i < 29; ++i) {
        double nlo = INFINITY, nhi = -INFINITY, llo = INFINITY, lhi = -INFINITY;
        for (int s = 0; s < seeds; ++s) {
            nlo = std::min(nlo, normal[s].rows[i].rho1);
            nhi = std::max(nhi, normal[s].rows[i].rho1);
            llo = std::min(llo, laplace[s].rows[i].rho1);
            lhi = std::max(lhi, laplace[s].rows[i].rho1);
        }
        const double gap = std::max(llo - nhi, nlo - lhi);
        tightest = std::min(tightest, gap);
        if (gap > 0) ++separated;
    }
    v.detail << "5000-price curve n=2..30 in " << fmt(secs, 3) << " s; rho1 bands disjoint at " << separated
             << "/29 depths, smallest gap " << fmt(tightest, 3);
    v.require(complete, "complete curve");
    v.require(secs < 300, "runtime < 5 min");
    v.require(separated == 29, "disjoint bands at every depth");
}

}  // namespace

int main(int argc, char** argv) {
    const std::pair<const char*, void (*)(Verdict&)> criteria[] = {
        {"formula vs finite-difference oracle", formula_vs_oracle},
        {"exact identities", exact_identities},
        {"hand values", hand_values},
        {"genial entropy", genial_entropy},
        {"reference function", reference_function},
        {"simulation table", table_replication},
        {"cos-walk", cos_walk_value},
        {"cauchy sign", cauchy_sign},
        {"normality-test calibration", normality_calibration},
        {"returns pipeline", returns_pipeline},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        Verdict v;
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.str().c_str());
        std::fflush(stdout);
        if (!v.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
