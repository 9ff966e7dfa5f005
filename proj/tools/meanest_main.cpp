// meanest command-line tool: generate instances, run one-shot estimates,
// Monte Carlo experiments, and scaling benchmarks.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meanest/baselines.hpp"
#include "meanest/core_ops.hpp"
#include "meanest/errors.hpp"
#include "meanest/fastgd.hpp"
#include "meanest/harness.hpp"
#include "meanest/instances.hpp"
#include "meanest/io.hpp"
#include "meanest/minsum.hpp"
#include "meanest/sampling.hpp"

namespace {

using nlohmann::json;

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

json parse_params(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw meanest::ConfigError(std::string("--params: ") + e.what());
    }
}

struct EstimateOptions {
    std::string input;
    double eps = 0.5;
    double delta = 0.1;
    std::string method = "fastgd";
    std::string preset = "practical";
    int depth = 1;
    int t_slack = 2;
    std::uint64_t seed = 0;
    std::optional<std::size_t> samples;
    bool as_json = false;
    bool with_trace = false;
};

int cmd_estimate(const EstimateOptions& opt) {
    using namespace meanest;
    const PointSet A = read_point_set(opt.input);
    const CostOracle oracle = exact_oracle(A);

    ExperimentSpec shim;
    shim.preset = opt.preset;
    shim.config.eps = opt.eps;
    shim.config.delta = opt.delta;
    shim.config.depth = opt.depth;
    shim.config.t_slack = opt.t_slack;
    shim.config.seed = opt.seed;
    const Method method = method_from_name(opt.method);
    const EstimatorConfig cfg = resolved_config(shim, method);

    EstimateResult res;
    GDTrace trace;
    if (method == Method::fastgd && opt.with_trace) {
        const auto t0 = now_ns();
        const CandidateMeans cm = draw_candidate_means(A, cfg, Rng(cfg.seed));
        const auto t1 = now_ns();
        auto [point, tr] = fastgd(cm, cfg);
        const auto t2 = now_ns();
        res = {std::move(point), cm.count() * cm.batch_size, t1 - t0, t2 - t1};
        trace = std::move(tr);
    } else {
        res = run_estimator(method, A, cfg, Rng(cfg.seed), opt.samples);
    }

    const double achieved = cost(A, res.point);
    const double ratio = approx_ratio(oracle, res.point);
    const bool ok = is_eps_approx(oracle, res.point, cfg.eps);

    if (opt.as_json) {
        json out{{"method", opt.method},
                 {"point", res.point},
                 {"samples", res.samples},
                 {"t_sample_ns", res.t_sample_ns},
                 {"t_agg_ns", res.t_agg_ns},
                 {"cost", achieved},
                 {"opt", oracle.opt},
                 {"approx_ratio", ratio},
                 {"eps_approx", ok},
                 {"eps", cfg.eps},
                 {"delta", cfg.delta}};
        if (opt.with_trace && method == Method::fastgd) out["trace"] = trace;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "method        " << opt.method << "\n"
                  << "samples       " << res.samples << "\n"
                  << "cost          " << achieved << "\n"
                  << "approx_ratio  " << ratio << "\n"
                  << "eps_approx    " << (ok ? "yes" : "no") << "\n"
                  << "t_sample_ns   " << res.t_sample_ns << "\n"
                  << "t_agg_ns      " << res.t_agg_ns << "\n";
    }
    return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir) {
    using namespace meanest;
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open " + config_path);
    json parsed;
    try {
        parsed = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("experiment config: ") + e.what());
    }
    const ExperimentSpec spec = parsed.get<ExperimentSpec>();
    const ExperimentReport report = run_experiment(spec);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

    const std::string csv_path = out_dir + "/trials.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot open " + csv_path + " for writing");
    write_trials_csv(csv, report.trials);
    if (!csv) throw IoError("write failed: " + csv_path);

    const std::string json_path = out_dir + "/report.json";
    std::ofstream rep(json_path);
    if (!rep) throw IoError("cannot open " + json_path + " for writing");
    rep << report_to_json(report).dump(2) << "\n";
    if (!rep) throw IoError("write failed: " + json_path);

    for (const EstimatorSummary& s : report.summaries)
        std::cout << s.estimator << ": success_rate=" << s.success_rate
                  << " mean_ratio=" << s.mean_ratio
                  << " samples=" << s.samples_per_trial << "\n";
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t dim,
              std::size_t reps, std::uint64_t seed, const std::string& out) {
    using namespace meanest;
    BenchSpec spec;
    if (!sizes.empty()) spec.sizes = sizes;
    spec.dim = dim;
    spec.reps = reps;
    spec.seed = seed;
    const auto series = run_scaling_bench(spec);
    for (const BenchSeries& s : series) {
        std::cout << s.aggregator << " slope=" << s.slope;
        for (const BenchPoint& p : s.points)
            std::cout << "  m=" << p.m << ":" << p.median_ns / 1e6 << "ms";
        std::cout << "\n";
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw IoError("cannot open " + out + " for writing");
        f << bench_to_json(series).dump(2) << "\n";
        if (!f) throw IoError("write failed: " + out);
    }
    return 0;
}

int cmd_gen(const std::string& kind, const std::string& params,
            std::uint64_t seed, const std::string& out,
            const std::string& format) {
    using namespace meanest;
    InstanceSpec spec{kind, parse_params(params), seed};
    const Instance inst = make_instance(spec);
    write_point_set(out, inst.points, format == "bin");
    std::cout << inst.id << ": n=" << inst.points.size()
              << " d=" << inst.points.dim() << " opt=" << inst.oracle.opt
              << " -> " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sublinear-sample Euclidean mean estimation toolkit"};
    app.require_subcommand(1);

    EstimateOptions est;
    std::size_t est_samples = 0;
    auto* estimate = app.add_subcommand("estimate", "One-shot estimate on a point-set file");
    estimate->add_option("--input", est.input, "Point-set file (text or binary)")->required();
    estimate->add_option("--eps", est.eps, "Target approximation eps");
    estimate->add_option("--delta", est.delta, "Failure probability");
    estimate->add_option("--method", est.method,
                         "fastgd|minsum|gmom|empirical|coordmed");
    estimate->add_option("--preset", est.preset, "paper|practical");
    estimate->add_option("--depth", est.depth, "MinSumSelect recursion depth");
    estimate->add_option("--t-slack", est.t_slack, "Extra FastGD iterations");
    estimate->add_option("--seed", est.seed, "RNG seed");
    auto* samples_opt = estimate->add_option(
        "--samples", est_samples, "Sample budget for the empirical baseline");
    estimate->add_flag("--json", est.as_json, "Emit JSON");
    estimate->add_flag("--trace", est.with_trace, "Include FastGD trace (JSON)");

    std::string exp_config, exp_out;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiment from a JSON config");
    experiment->add_option("--config", exp_config, "Experiment config JSON")->required();
    experiment->add_option("--out", exp_out, "Output directory")->required();

    std::vector<std::size_t> bench_sizes;
    std::size_t bench_dim = 16, bench_reps = 5;
    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Aggregate-phase scaling benchmark");
    bench->add_option("--sizes", bench_sizes, "Candidate-set sizes (ascending)")->delimiter(',');
    bench->add_option("--dim", bench_dim, "Dimension");
    bench->add_option("--reps", bench_reps, "Repetitions per point");
    bench->add_option("--seed", bench_seed, "RNG seed");
    bench->add_option("--out", bench_out, "JSON output file");

    std::string gen_kind, gen_params = "{}", gen_out, gen_format = "text";
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate an instance file");
    gen->add_option("--kind", gen_kind,
                    "two_point_lb|empirical_mean_lb|gaussian|two_cluster|pareto_tail")
        ->required();
    gen->add_option("--params", gen_params, "Kind-specific params as JSON");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "Output file")->required();
    gen->add_option("--format", gen_format, "text|bin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // bad arguments are config errors
    }

    try {
        if (*estimate) {
            if (*samples_opt) est.samples = est_samples;
            return cmd_estimate(est);
        }
        if (*experiment) return cmd_experiment(exp_config, exp_out);
        if (*bench)
            return cmd_bench(bench_sizes, bench_dim, bench_reps, bench_seed,
                             bench_out);
        if (*gen) return cmd_gen(gen_kind, gen_params, gen_seed, gen_out, gen_format);
    } catch (const meanest::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const meanest::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
