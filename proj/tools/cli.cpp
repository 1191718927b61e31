#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "slidestats/csv.hpp"
#include "slidestats/error.hpp"
#include "slidestats/generators.hpp"
#include "slidestats/harness.hpp"
#include "slidestats/nn.hpp"
#include "slidestats/returns.hpp"
#include "slidestats/rng.hpp"
#include "slidestats/slide.hpp"

namespace slide::cli {

namespace {

using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kDuplicate = 3,
    kNumeric = 4,
};

/// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct Common {
    std::string format = "csv";
    std::size_t threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

bool json_out(const Common& c) { return c.format == "json"; }

// --- source specs ----------------------------------------------------------

struct SpecFlags {
    std::string kind;
    std::size_t m = 1;
    double alpha = 2.0;
    double beta = 0.0;
    std::size_t burn_in = 100;
    std::optional<std::uint64_t> seed;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--kind", f.kind, "Source kind (uniform-cube, normal, bivariate-normal, exponential, "
                                      "sqrt-power, laplace, cauchy, stable, cantor, sierpinski, cos-walk, primes)");
    cmd->add_option("--m", f.m, "Dimension of uniform-cube");
    cmd->add_option("--alpha", f.alpha, "Stable index in (0, 2]");
    cmd->add_option("--beta", f.beta, "Stable skewness in [-1, 1]");
    cmd->add_option("--burn-in", f.burn_in, "Chaos-game iterates to discard");
    cmd->add_option("--seed", f.seed, "RNG seed (required for random sources)");
}

SourceSpec to_spec(const SpecFlags& f, std::size_t size) {
    if (f.kind.empty()) throw UsageError("--kind is required");
    SourceSpec s;
    s.kind = parse_source_kind(f.kind);
    s.dimension = f.m;
    s.alpha = f.alpha;
    s.beta = f.beta;
    s.burn_in = f.burn_in;
    s.size = size;
    if (!s.deterministic() && !f.seed) throw UsageError("--seed is required for random sources");
    s.seed = f.seed.value_or(0);
    return s;
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
    if (!seed) throw UsageError("--seed is required");
    return *seed;
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs {
    Common common;
    std::string input;
    std::optional<std::size_t> dim;
    std::string mode = "nearest";
    std::string engine = "auto";
    bool dedupe = false;
    bool skip_header = false;
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
    CsvReadOptions ro;
    ro.dimension = a.dim;
    ro.skip_header = a.skip_header;
    PointCloud pc = read_point_cloud_csv_file(a.input, ro);
    if (a.dedupe) pc = dedupe(pc);

    const GapMode mode = parse_gap_mode(a.mode);
    if (mode == GapMode::Consecutive && pc.dimension() != 1)
        throw UsageError("--mode consecutive needs 1-D input");
    const DistanceProfile p = pc.dimension() == 1
                                  ? nn_distances_1d(pc.coordinates(), mode)
                                  : nn_distances(pc, parse_engine(a.engine), a.common.threads);
    const SlideEstimate e = estimate(p);
    if (json_out(a.common))
        out << json{{"rho1", number(e.rho1)}, {"rho2", number(e.rho2)}, {"n", e.n}}.dump() << '\n';
    else
        out << "rho1,rho2,n\n" << format_double(e.rho1) << ',' << format_double(e.rho2) << ',' << e.n << '\n';
    return kOk;
}

// --- sample ----------------------------------------------------------------

struct SampleArgs {
    SpecFlags spec;
    std::size_t size = 0;
    std::uint64_t stream = 0;
    std::string output;
};

int do_sample(const SampleArgs& a, std::ostream& out) {
    const PointCloud pc = sample(to_spec(a.spec, a.size), a.stream);
    if (a.output.empty()) {
        write_point_cloud_csv(out, pc);
    } else {
        std::ofstream f(a.output);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + a.output + "'");
        write_point_cloud_csv(f, pc);
    }
    return kOk;
}

// --- simulate / table ------------------------------------------------------

json summary_json(const ExperimentSummary& s) {
    return json{{"kind", s.spec.label()},
                {"m", s.spec.point_dimension()},
                {"size", s.sample_size},
                {"reps", s.reps},
                {"seed", s.seed},
                {"mu1", number(s.mu1)},
                {"sigma1", number(s.sigma1)},
                {"mu2", number(s.mu2)},
                {"sigma2", number(s.sigma2)},
                {"dim_est1", number(s.dim_est1())},
                {"dim_est2", number(s.dim_est2())}};
}

void emit_summaries(const std::vector<ExperimentSummary>& rows, const Common& c, std::ostream& out) {
    if (json_out(c)) {
        json arr = json::array();
        for (const auto& s : rows) arr.push_back(summary_json(s));
        out << arr.dump(2) << '\n';
    } else {
        write_summary_csv(out, rows);
    }
}

/// key = value lines; '#' starts a comment. ':' also separates.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open config '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto sep = line.find_first_of("=:");
        if (sep == std::string::npos)
            throw Error(ErrorCode::ParseError, path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, sep))] = trim(line.substr(sep + 1));
    }
    return kv;
}

struct SimulateArgs {
    Common common;
    SpecFlags spec;
    std::size_t size = 10000;
    std::size_t reps = 100;
    std::string config;
    std::string mode = "nearest";
    std::optional<double> tangible_dim;
};

void apply_config(SimulateArgs& a, const CLI::App& cmd) {
    if (a.config.empty()) return;
    const auto kv = read_config(a.config);
    auto given = [&](const char* flag) { return cmd.get_option(flag)->count() > 0; };
    for (const auto& [key, value] : kv) {
        try {
            if (key == "kind" && !given("--kind")) a.spec.kind = value;
            else if (key == "size" && !given("--size")) a.size = std::stoull(value);
            else if (key == "reps" && !given("--reps")) a.reps = std::stoull(value);
            else if (key == "seed" && !given("--seed")) a.spec.seed = std::stoull(value);
            else if (key == "m" && !given("--m")) a.spec.m = std::stoull(value);
            else if (key == "alpha" && !given("--alpha")) a.spec.alpha = std::stod(value);
            else if (key == "beta" && !given("--beta")) a.spec.beta = std::stod(value);
            else if (key == "burn_in" && !given("--burn-in")) a.spec.burn_in = std::stoull(value);
            else if (key == "mode" && !given("--mode")) a.mode = value;
            else if (key != "kind" && key != "size" && key != "reps" && key != "seed" && key != "m" &&
                     key != "alpha" && key != "beta" && key != "burn_in" && key != "mode")
                throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad value for config key '" + key + "': " + value);
        }
    }
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
    const SourceSpec spec = to_spec(a.spec, a.size);
    RunOptions run;
    run.threads = a.common.threads;
    run.mode = parse_gap_mode(a.mode);
    const ExperimentSummary s = replicate(spec, a.size, a.reps, spec.seed, run);

    std::optional<TangibilityReport> t;
    if (a.tangible_dim) t = tangibility_check(s, *a.tangible_dim);

    if (json_out(a.common)) {
        json j = summary_json(s);
        if (t)
            j["tangibility"] = json{{"dimension", t->dimension}, {"target_rho1", t->target_rho1},
                                    {"target_rho2", t->target_rho2}, {"dim_est1", number(t->dim_est1)},
                                    {"dim_est2", number(t->dim_est2)}, {"rel_err1", number(t->rel_err1)},
                                    {"rel_err2", number(t->rel_err2)}, {"consistent", t->consistent}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    write_summary_csv(out, {s});
    if (t) {
        out << "\ndimension,target_rho1,target_rho2,dim_est1,dim_est2,rel_err1,rel_err2,consistent\n"
            << format_double(t->dimension) << ',' << format_double(t->target_rho1) << ','
            << format_double(t->target_rho2) << ',' << format_double(t->dim_est1) << ','
            << format_double(t->dim_est2) << ',' << format_double(t->rel_err1) << ','
            << format_double(t->rel_err2) << ',' << (t->consistent ? "true" : "false") << '\n';
    }
    return kOk;
}

struct TableArgs {
    Common common;
    std::size_t size = 10000;
    std::size_t reps = 100;
    std::optional<std::uint64_t> seed;
    std::string mode = "nearest";
};

int do_table(const TableArgs& a, std::ostream& out) {
    RunOptions run;
    run.threads = a.common.threads;
    run.mode = parse_gap_mode(a.mode);
    emit_summaries(table_run(standard_rows(), a.size, a.reps, require_seed(a.seed), run), a.common, out);
    return kOk;
}

// --- returns-curve / scatter -----------------------------------------------

struct SeriesFlags {
    std::vector<std::string> prices;
    std::string price_col;
    bool skip_header = false;
    std::string synthetic;
    std::size_t length = 5000;
    std::string label;
};

void add_series_flags(CLI::App* cmd, SeriesFlags& f, bool many) {
    if (many)
        cmd->add_option("--prices", f.prices, "Price CSV file(s)");
    else
        cmd->add_option("--prices", f.prices, "Price CSV file")->expected(1);
    cmd->add_option("--price-col", f.price_col, "Price column: zero-based index or header name (default: last)");
    cmd->add_flag("--skip-header", f.skip_header, "Skip the first line of the price file");
    cmd->add_option("--label", f.label, "Series label");
}

ReturnSeries load_series(const std::string& path, const SeriesFlags& f) {
    const auto prices = load_prices_file(path, PriceColumn::parse(f.price_col), f.skip_header);
    std::string label = f.label.empty() ? std::filesystem::path(path).stem().string() : f.label;
    return log_returns(prices, std::move(label));
}

struct CurveArgs {
    Common common;
    SeriesFlags series;
    SpecFlags synthetic;
    std::string range = "2:30";
    std::optional<std::size_t> windows;
    std::string engine = "auto";
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const auto n = std::stoull(text);
            return {n, n};
        }
        return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw UsageError("--n expects LO:HI or a single depth, got '" + text + "'");
    }
}

int do_curve(const CurveArgs& a, std::ostream& out) {
    ReturnSeries rs;
    if (!a.series.prices.empty()) {
        if (!a.synthetic.kind.empty()) throw UsageError("use either --prices or --kind, not both");
        rs = load_series(a.series.prices.front(), a.series);
    } else if (!a.synthetic.kind.empty()) {
        const SourceSpec spec = to_spec(a.synthetic, a.series.length);
        if (spec.point_dimension() != 1) throw UsageError("synthetic returns need a 1-D source");
        const PointCloud pc = sample(spec);
        rs = ReturnSeries{{pc.coordinates().begin(), pc.coordinates().end()},
                          a.series.label.empty() ? spec.label() : a.series.label};
    } else {
        throw UsageError("returns-curve needs --prices or --kind");
    }
    const auto [lo, hi] = parse_range(a.range);
    CurveOptions opts;
    opts.windows = a.windows;
    opts.engine = parse_engine(a.engine);
    opts.threads = a.common.threads;
    const RhoCurve curve = rho_curve(rs, lo, hi, opts);
    if (json_out(a.common)) {
        json rows = json::array();
        for (const auto& r : curve.rows)
            rows.push_back(json{{"n", r.n}, {"rho1", number(r.rho1)}, {"rho2", number(r.rho2)}, {"windows", r.windows}});
        out << json{{"label", curve.label}, {"rows", rows}}.dump(2) << '\n';
    } else {
        write_curve_csv(out, curve);
    }
    return kOk;
}

struct ScatterArgs {
    Common common;
    SeriesFlags series;
    std::string family;
    std::size_t count = 1000;
    std::size_t length = 500;
    std::optional<std::size_t> embed;
    std::optional<std::uint64_t> seed;
    double alpha = 2.0, beta = 0.0;
    std::size_t m = 1;
};

int do_scatter(const ScatterArgs& a, std::ostream& out) {
    std::vector<ScatterPoint> points;
    std::vector<double> alphas, betas;
    if (!a.series.prices.empty()) {
        if (!a.family.empty()) throw UsageError("use either --prices or --family, not both");
        if (a.series.prices.size() > 1 && !a.series.label.empty())
            throw UsageError("--label only applies to a single --prices file");
        CurveOptions opts;
        opts.threads = a.common.threads;
        for (const auto& path : a.series.prices) {
            points.push_back(scatter_point(load_series(path, a.series), a.embed.value_or(3), opts));
            alphas.push_back(std::nan(""));
            betas.push_back(std::nan(""));
        }
    } else if (!a.family.empty()) {
        CloudFamily fam;
        if (a.family == "stable") {
            fam.random_stable = true;
        } else {
            fam.spec.kind = parse_source_kind(a.family);
            fam.spec.dimension = a.m;
            fam.spec.alpha = a.alpha;
            fam.spec.beta = a.beta;
        }
        RunOptions run;
        run.threads = a.common.threads;
        const auto pts = cloud(fam, a.count, a.length, a.embed, require_seed(a.seed), run);
        for (const auto& p : pts) {
            points.push_back(ScatterPoint{a.family, p.rho2, p.rho1});
            alphas.push_back(p.alpha);
            betas.push_back(p.beta);
        }
    } else {
        throw UsageError("scatter needs --family or --prices");
    }

    if (json_out(a.common)) {
        json arr = json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            json j{{"label", points[i].label}, {"rho2", number(points[i].rho2)}, {"rho1", number(points[i].rho1)}};
            if (std::isfinite(alphas[i])) {
                j["alpha"] = alphas[i];
                j["beta"] = betas[i];
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
    } else {
        write_scatter_csv(out, points);
    }
    return kOk;
}

// --- test-normal -----------------------------------------------------------

struct TestArgs {
    Common common;
    SeriesFlags series;
    std::string input;
    std::optional<std::size_t> embed;
    std::size_t reps = 500;
    std::optional<std::uint64_t> seed;
    double alpha = 0.05;
};

int do_test_normal(const TestArgs& a, std::ostream& out) {
    std::vector<double> data;
    if (!a.input.empty() && !a.series.prices.empty()) throw UsageError("use either --input or --prices, not both");
    if (!a.input.empty()) {
        CsvReadOptions ro;
        ro.dimension = 1;
        ro.skip_header = a.series.skip_header;
        const PointCloud pc = read_point_cloud_csv_file(a.input, ro);
        data.assign(pc.coordinates().begin(), pc.coordinates().end());
    } else if (!a.series.prices.empty()) {
        data = load_series(a.series.prices.front(), a.series).u;
    } else {
        throw UsageError("test-normal needs --input or --prices");
    }
    NormalityOptions opts;
    opts.embed_n = a.embed;
    opts.reps = a.reps;
    opts.seed = require_seed(a.seed);
    opts.alpha = a.alpha;
    opts.threads = a.common.threads;
    const TestReport r = normality_test(data, opts);
    if (json_out(a.common)) {
        out << json{{"rho1", number(r.rho1)}, {"rho2", number(r.rho2)}, {"null", r.null_spec},
                    {"reps", r.reps}, {"statistic", number(r.statistic)}, {"p_value", r.p_value},
                    {"alpha", r.alpha}, {"reject", r.reject}}
                   .dump(2)
            << '\n';
    } else {
        out << "rho1,rho2,null,reps,statistic,p_value,alpha,reject\n"
            << format_double(r.rho1) << ',' << format_double(r.rho2) << ',' << r.null_spec << ',' << r.reps << ','
            << format_double(r.statistic) << ',' << format_double(r.p_value) << ',' << format_double(r.alpha)
            << ',' << (r.reject ? "true" : "false") << '\n';
    }
    return kOk;
}

int compute_exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::DuplicatePoint: return kDuplicate;
    default: return kNumeric;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Slide statistics of point sets: rho1/rho2, simulations, and return curves", "slidestats"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "rho1, rho2 and point count of a point-cloud CSV");
    c->add_option("--input", compute.input, "Point CSV, one point per row")->required();
    c->add_option("--dim", compute.dim, "Use the first m columns");
    c->add_option("--mode", compute.mode, "1-D distances: nearest or consecutive")
        ->check(CLI::IsMember({"nearest", "consecutive"}));
    c->add_option("--engine", compute.engine, "auto, kdtree or brute")->check(CLI::IsMember({"auto", "kdtree", "brute"}));
    c->add_flag("--dedupe", compute.dedupe, "Collapse exact duplicate points");
    c->add_flag("--skip-header", compute.skip_header, "Skip the first line");
    add_common(c, compute.common);

    SampleArgs samp;
    auto* s = app.add_subcommand("sample", "Write a generated point set as CSV");
    add_spec_flags(s, samp.spec);
    s->add_option("--size", samp.size, "Number of points")->required();
    s->add_option("--stream", samp.stream, "Stream index under the seed");
    s->add_option("--output", samp.output, "Output file (default: stdout)");

    SimulateArgs sim;
    auto* sm = app.add_subcommand("simulate", "Monte Carlo mean/SD of rho1 and rho2 for one source");
    add_spec_flags(sm, sim.spec);
    sm->add_option("--size", sim.size, "Sample size");
    sm->add_option("--reps", sim.reps, "Replicates");
    sm->add_option("--config", sim.config, "key = value file with kind/size/reps/seed (flags override)");
    sm->add_option("--mode", sim.mode, "1-D distances: nearest or consecutive")
        ->check(CLI::IsMember({"nearest", "consecutive"}));
    sm->add_option("--tangible-dim", sim.tangible_dim, "Also compare against a tangible process of this dimension");
    add_common(sm, sim.common);

    TableArgs table;
    auto* t = app.add_subcommand("table", "All ten simulation rows");
    t->add_option("--size", table.size, "Sample size");
    t->add_option("--reps", table.reps, "Replicates per row");
    t->add_option("--seed", table.seed, "RNG seed")->required();
    t->add_option("--mode", table.mode, "1-D distances: nearest or consecutive")
        ->check(CLI::IsMember({"nearest", "consecutive"}));
    add_common(t, table.common);

    CurveArgs curve;
    auto* rc = app.add_subcommand("returns-curve", "rho1/rho2 of delay embeddings against depth n");
    add_series_flags(rc, curve.series, false);
    rc->add_option("--kind", curve.synthetic.kind, "Synthetic i.i.d. returns instead of --prices");
    rc->add_option("--alpha", curve.synthetic.alpha, "Stable index for --kind stable");
    rc->add_option("--beta", curve.synthetic.beta, "Stable skewness for --kind stable");
    rc->add_option("--seed", curve.synthetic.seed, "Seed for --kind");
    rc->add_option("--length", curve.series.length, "Synthetic series length");
    rc->add_option("--n", curve.range, "Depth range LO:HI");
    rc->add_option("--windows", curve.windows, "Windows per depth (default: all)");
    rc->add_option("--engine", curve.engine, "auto, kdtree or brute")->check(CLI::IsMember({"auto", "kdtree", "brute"}));
    add_common(rc, curve.common);

    ScatterArgs scat;
    auto* sc = app.add_subcommand("scatter", "(rho2, rho1) points for a simulated family or price files");
    add_series_flags(sc, scat.series, true);
    sc->add_option("--family", scat.family, "stable (random alpha, beta) or a source kind");
    sc->add_option("--count", scat.count, "Number of samples");
    sc->add_option("--length", scat.length, "Values per sample");
    sc->add_option("--embed", scat.embed, "Delay-embedding depth (price files default to 3)");
    sc->add_option("--seed", scat.seed, "RNG seed");
    sc->add_option("--alpha", scat.alpha, "Stable index for --family stable-fixed kinds");
    sc->add_option("--beta", scat.beta, "Stable skewness");
    sc->add_option("--m", scat.m, "Dimension of uniform-cube");
    add_common(sc, scat.common);

    TestArgs test;
    auto* tn = app.add_subcommand("test-normal", "Monte Carlo normality test on (rho1, rho2)");
    tn->add_option("--input", test.input, "1-D sample CSV");
    add_series_flags(tn, test.series, false);
    tn->add_option("--embed", test.embed, "Delay-embedding depth");
    tn->add_option("--reps", test.reps, "Null replicates");
    tn->add_option("--seed", test.seed, "RNG seed")->required();
    tn->add_option("--alpha", test.alpha, "Significance level");
    add_common(tn, test.common);

    std::vector<std::string> argv_store{"slidestats"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    }

    try {
        apply_config(sim, *sm);
        if (c->parsed()) return do_compute(compute, out);
        if (s->parsed()) return do_sample(samp, out);
        if (sm->parsed()) return do_simulate(sim, out);
        if (t->parsed()) return do_table(table, out);
        if (rc->parsed()) return do_curve(curve, out);
        if (sc->parsed()) return do_scatter(scat, out);
        if (tn->parsed()) return do_test_normal(test, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return c->parsed() ? compute_exit_code(e.code()) : kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return c->parsed() ? kNumeric : kFailure;
    }
    return kFailure;
}

}  // namespace slide::cli
