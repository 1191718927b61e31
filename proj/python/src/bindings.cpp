#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slidestats/entropy.hpp"
#include "slidestats/error.hpp"
#include "slidestats/generators.hpp"
#include "slidestats/harness.hpp"
#include "slidestats/nn.hpp"
#include "slidestats/reference.hpp"
#include "slidestats/returns.hpp"
#include "slidestats/slide.hpp"

namespace py = pybind11;
using namespace slide;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointCloud to_cloud(const Array& a) {
    if (a.ndim() == 1) return PointCloud::from_1d({a.data(), a.data() + a.size()});
    if (a.ndim() != 2) throw Error(ErrorCode::InvalidArgument, "points must be a 1-D or 2-D array");
    return PointCloud(static_cast<std::size_t>(a.shape(1)), {a.data(), a.data() + a.size()});
}

py::array_t<double> to_array(const PointCloud& pc) {
    py::array_t<double> out({pc.size(), pc.dimension()});
    std::copy(pc.coordinates().begin(), pc.coordinates().end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(std::span<const double> xs) {
    py::array_t<double> out(xs.size());
    std::copy(xs.begin(), xs.end(), out.mutable_data());
    return out;
}

DistanceProfile profile_of(const Array& a) { return make_profile({a.data(), a.data() + a.size()}); }

SourceSpec make_spec(const std::string& kind, std::size_t size, std::uint64_t seed, std::size_t m, double alpha,
                     double beta, std::size_t burn_in) {
    SourceSpec s;
    s.kind = parse_source_kind(kind);
    s.size = size;
    s.seed = seed;
    s.dimension = m;
    s.alpha = alpha;
    s.beta = beta;
    s.burn_in = burn_in;
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Slide statistics rho1/rho2 of point sets";

    static py::exception<Error> slide_error(m, "SlideError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(slide_error, e.what());
        }
    });

    m.def("rho1", [](const Array& d) { return rho1(profile_of(d)); }, py::arg("distances"));
    m.def("rho2", [](const Array& d) { return rho2(profile_of(d)); }, py::arg("distances"));
    m.def("rho1_fd", [](const Array& d) { return rho1_fd(profile_of(d)); }, py::arg("distances"));
    m.def("rho2_fd", [](const Array& d) { return rho2_fd(profile_of(d)); }, py::arg("distances"));
    m.def("slide_function", [](const Array& d, double t) { return slide_function_step(profile_of(d), t); },
          py::arg("distances"), py::arg("t"));
    m.def(
        "estimate",
        [](const Array& d) {
            const SlideEstimate e = estimate(profile_of(d));
            return py::make_tuple(e.rho1, e.rho2, e.n);
        },
        py::arg("distances"), "(rho1, rho2, n) of a distance profile");

    m.def("genial_entropy_step",
          [](std::vector<double> breakpoints, std::vector<double> values) {
              return genial_entropy_step(StepDensity(std::move(breakpoints), std::move(values)));
          },
          py::arg("breakpoints"), py::arg("values"));
    m.def("genial_entropy_complement_ecdf", [](const Array& d) { return genial_entropy_complement_ecdf(profile_of(d)); },
          py::arg("distances"));
    m.def(
        "genial_entropy_quadrature",
        [](const std::function<double(double)>& f, double lower, double upper, double tol) {
            return genial_entropy_quadrature(f, Interval{lower, upper}, tol);
        },
        py::arg("density"), py::arg("lower") = 0.0, py::arg("upper") = std::numeric_limits<double>::infinity(),
        py::arg("tol") = 1e-10);

    m.def("log_slide_reference", &log_slide_reference, py::arg("t"));
    m.def("zeta", &zeta, py::arg("s"));
    m.def("tangible_target", &tangible_target, py::arg("d"), py::arg("n"));
    m.def("dimension_from_rho2", &dimension_from_rho2, py::arg("rho2"));

    m.def(
        "nn_distances",
        [](const Array& points, const std::string& engine, std::size_t threads) {
            const PointCloud pc = to_cloud(points);
            return to_array(nearest_neighbor_distances(pc, parse_engine(engine), threads));
        },
        py::arg("points"), py::arg("engine") = "auto", py::arg("threads") = 1,
        "Nearest-neighbour distance of each row, in input order");
    m.def(
        "nn_distances_1d",
        [](const Array& xs, const std::string& mode) {
            return to_array(nn_distances_1d({xs.data(), static_cast<std::size_t>(xs.size())}, parse_gap_mode(mode))
                                .values());
        },
        py::arg("xs"), py::arg("mode") = "nearest", "Sorted-descending distance profile of a 1-D sample");
    m.def(
        "compute",
        [](const Array& points, const std::string& mode, const std::string& engine, std::size_t threads) {
            const PointCloud pc = to_cloud(points);
            const DistanceProfile p = pc.dimension() == 1 ? nn_distances_1d(pc.coordinates(), parse_gap_mode(mode))
                                                          : nn_distances(pc, parse_engine(engine), threads);
            const SlideEstimate e = estimate(p);
            return py::make_tuple(e.rho1, e.rho2, e.n);
        },
        py::arg("points"), py::arg("mode") = "nearest", py::arg("engine") = "auto", py::arg("threads") = 1,
        "(rho1, rho2, n) of a point set");

    m.def(
        "sample",
        [](const std::string& kind, std::size_t size, std::uint64_t seed, std::size_t m, double alpha, double beta,
           std::size_t burn_in, std::uint64_t stream) {
            return to_array(sample(make_spec(kind, size, seed, m, alpha, beta, burn_in), stream));
        },
        py::arg("kind"), py::arg("size"), py::arg("seed") = 0, py::arg("m") = 1, py::arg("alpha") = 2.0,
        py::arg("beta") = 0.0, py::arg("burn_in") = 100, py::arg("stream") = 0);

    m.def(
        "replicate",
        [](const std::string& kind, std::size_t size, std::size_t reps, std::uint64_t seed, std::size_t m,
           double alpha, double beta, const std::string& mode, std::size_t threads) {
            RunOptions run;
            run.threads = threads;
            run.mode = parse_gap_mode(mode);
            const auto s = replicate(make_spec(kind, size, seed, m, alpha, beta, 100), size, reps, seed, run);
            return py::dict(py::arg("label") = s.spec.label(), py::arg("mu1") = s.mu1, py::arg("sigma1") = s.sigma1,
                            py::arg("mu2") = s.mu2, py::arg("sigma2") = s.sigma2,
                            py::arg("dim_est1") = s.dim_est1(), py::arg("dim_est2") = s.dim_est2());
        },
        py::arg("kind"), py::arg("size"), py::arg("reps"), py::arg("seed"), py::arg("m") = 1,
        py::arg("alpha") = 2.0, py::arg("beta") = 0.0, py::arg("mode") = "nearest", py::arg("threads") = 0);

    m.def("log_returns", [](std::vector<double> prices) { return to_array(log_returns(prices).u); },
          py::arg("prices"));
    m.def(
        "rho_curve",
        [](const Array& returns, std::size_t n_min, std::size_t n_max, std::optional<std::size_t> windows,
           std::size_t threads) {
            CurveOptions opts;
            opts.windows = windows;
            opts.threads = threads;
            const RhoCurve c = rho_curve(ReturnSeries{{returns.data(), returns.data() + returns.size()}, {}},
                                         n_min, n_max, opts);
            py::list rows;
            for (const auto& r : c.rows) rows.append(py::make_tuple(r.n, r.rho1, r.rho2, r.windows));
            return rows;
        },
        py::arg("returns"), py::arg("n_min") = 2, py::arg("n_max") = 30, py::arg("windows") = py::none(),
        py::arg("threads") = 0, "List of (n, rho1, rho2, windows)");

    m.def(
        "normality_test",
        [](const Array& data, std::optional<std::size_t> embed, std::size_t reps, std::uint64_t seed, double alpha,
           std::size_t threads) {
            NormalityOptions opts;
            opts.embed_n = embed;
            opts.reps = reps;
            opts.seed = seed;
            opts.alpha = alpha;
            opts.threads = threads;
            const TestReport r = normality_test({data.data(), static_cast<std::size_t>(data.size())}, opts);
            return py::dict(py::arg("rho1") = r.rho1, py::arg("rho2") = r.rho2, py::arg("statistic") = r.statistic,
                            py::arg("p_value") = r.p_value, py::arg("reject") = r.reject);
        },
        py::arg("data"), py::arg("embed") = py::none(), py::arg("reps") = 500, py::arg("seed") = 0,
        py::arg("alpha") = 0.05, py::arg("threads") = 0);
}
