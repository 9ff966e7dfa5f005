#include "meanest/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "meanest/baselines.hpp"
#include "meanest/core_ops.hpp"
#include "meanest/errors.hpp"
#include "meanest/fastgd.hpp"
#include "meanest/minsum.hpp"
#include "meanest/sampling.hpp"

namespace meanest {

namespace {

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// keeps a computed value alive across optimization
void keep(double x) { asm volatile("" : : "g"(x) : "memory"); }

}  // namespace

Method method_from_name(const std::string& name) {
    if (name == "fastgd") return Method::fastgd;
    if (name == "minsum") return Method::minsum;
    if (name == "gmom") return Method::gmom;
    if (name == "empirical") return Method::empirical;
    if (name == "coordmed") return Method::coordmed;
    throw ConfigError("unknown estimator: " + name);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::fastgd: return "fastgd";
        case Method::minsum: return "minsum";
        case Method::gmom: return "gmom";
        case Method::empirical: return "empirical";
        case Method::coordmed: return "coordmed";
    }
    return "?";
}

EstimateResult run_estimator(Method method, const PointSet& A,
                             const EstimatorConfig& cfg, const Rng& rng,
                             std::optional<std::size_t> empirical_samples) {
    EstimateResult res;
    if (method == Method::empirical) {
        const std::size_t count = empirical_samples.value_or(cfg.total_samples());
        const auto t0 = now_ns();
        res.point = empirical_mean_estimate(A, count, rng.substream(0));
        res.t_sample_ns = now_ns() - t0;
        res.samples = count;
        return res;
    }

    const auto t0 = now_ns();
    const CandidateMeans cm = draw_candidate_means(A, cfg, rng);
    const auto t1 = now_ns();
    switch (method) {
        case Method::fastgd: res.point = fastgd(cm, cfg).first; break;
        case Method::minsum: res.point = minsum_estimate(cm, cfg); break;
        case Method::gmom: res.point = weiszfeld(cm.means).point; break;
        case Method::coordmed: res.point = coordinate_median(cm.means); break;
        case Method::empirical: break;  // handled above
    }
    const auto t2 = now_ns();
    res.t_sample_ns = t1 - t0;
    res.t_agg_ns = t2 - t1;
    res.samples = cm.count() * cm.batch_size;
    return res;
}

EstimatorConfig resolved_config(const ExperimentSpec& spec, Method method) {
    EstimatorConfig cfg = spec.config;
    if (spec.preset == "paper") {
        if (method == Method::minsum) {
            const EstimatorConfig p =
                paper_preset_minsum(cfg.eps, cfg.delta, cfg.depth);
            cfg.a = p.a;
            cfg.b = p.b;
        } else {
            cfg.a = 1440.0;
            cfg.b = 50.0;
        }
    } else if (spec.preset == "practical") {
        cfg.a = 40.0;
        cfg.b = 10.0;
    } else {
        throw ConfigError("unknown preset: " + spec.preset);
    }
    if (spec.a_override) cfg.a = *spec.a_override;
    if (spec.b_override) cfg.b = *spec.b_override;
    cfg.validate();
    return cfg;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.trials == 0) throw ConfigError("experiment: trials must be >= 1");
    if (spec.estimators.empty())
        throw ConfigError("experiment: no estimators configured");

    struct Job {
        Method method;
        EstimatorConfig cfg;
        std::string name;
    };
    std::vector<Job> jobs;
    for (const std::string& name : spec.estimators) {
        const Method method = method_from_name(name);
        jobs.push_back({method, resolved_config(spec, method), name});
    }

    const Instance inst = make_instance(spec.instance);
    const std::size_t n_jobs = jobs.size();
    std::vector<TrialRecord> records(spec.trials * n_jobs);

    const Rng base(spec.config.seed);
    auto run_trial = [&](std::size_t trial) {
        const Rng stream = base.substream(trial);
        for (std::size_t j = 0; j < n_jobs; ++j) {
            const Job& job = jobs[j];
            const EstimateResult est = run_estimator(
                job.method, inst.points, job.cfg, stream, spec.empirical_samples);
            TrialRecord& rec = records[trial * n_jobs + j];
            rec.trial_id = trial;
            rec.estimator = job.name;
            rec.instance = inst.id;
            rec.eps = job.cfg.eps;
            rec.delta = job.cfg.delta;
            rec.samples = est.samples;
            rec.approx_ratio = approx_ratio(inst.oracle, est.point);
            rec.success = is_eps_approx(inst.oracle, est.point, job.cfg.eps);
            rec.t_sample_ns = est.t_sample_ns;
            rec.t_agg_ns = est.t_agg_ns;
        }
    };

    unsigned workers = spec.threads ? spec.threads
                                    : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > spec.trials) workers = static_cast<unsigned>(spec.trials);

    if (workers <= 1) {
        for (std::size_t t = 0; t < spec.trials; ++t) run_trial(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < spec.trials;
                     t = next.fetch_add(1))
                    run_trial(t);
            });
        for (std::thread& th : pool) th.join();
    }

    ExperimentReport report;
    report.spec = spec;
    report.trials = std::move(records);

    // deterministic fold in trial order
    for (std::size_t j = 0; j < n_jobs; ++j) {
        EstimatorSummary s;
        s.estimator = jobs[j].name;
        s.trials = spec.trials;
        std::vector<double> ratios;
        ratios.reserve(spec.trials);
        double ratio_sum = 0.0, t_sample = 0.0, t_agg = 0.0;
        std::size_t successes = 0;
        for (std::size_t t = 0; t < spec.trials; ++t) {
            const TrialRecord& rec = report.trials[t * n_jobs + j];
            ratios.push_back(rec.approx_ratio);
            ratio_sum += rec.approx_ratio;
            t_sample += static_cast<double>(rec.t_sample_ns);
            t_agg += static_cast<double>(rec.t_agg_ns);
            successes += rec.success ? 1 : 0;
            s.samples_per_trial = rec.samples;
        }
        const double n = static_cast<double>(spec.trials);
        s.success_rate = static_cast<double>(successes) / n;
        s.mean_ratio = ratio_sum / n;
        s.p50_ratio = select_kth(ratios, (spec.trials + 1) / 2);
        s.p90_ratio = select_kth(
            ratios, std::max<std::size_t>(1, (9 * spec.trials + 9) / 10));
        s.max_ratio = select_kth(ratios, spec.trials);
        s.mean_t_sample_ns = t_sample / n;
        s.mean_t_agg_ns = t_agg / n;
        report.summaries.push_back(std::move(s));
    }
    return report;
}

void write_trials_csv(std::ostream& out,
                      const std::vector<TrialRecord>& trials) {
    out << "trial_id,estimator,instance,eps,delta,samples,approx_ratio,"
           "success,t_sample_ns,t_agg_ns\n";
    for (const TrialRecord& r : trials) {
        out << r.trial_id << ',' << r.estimator << ',' << r.instance << ','
            << fmt_double(r.eps) << ',' << fmt_double(r.delta) << ','
            << r.samples << ',' << fmt_double(r.approx_ratio) << ','
            << (r.success ? 1 : 0) << ',' << r.t_sample_ns << ','
            << r.t_agg_ns << '\n';
    }
}

void to_json(nlohmann::json& j, const ExperimentSpec& spec) {
    j = nlohmann::json{{"instance", spec.instance},
                       {"estimators", spec.estimators},
                       {"eps", spec.config.eps},
                       {"delta", spec.config.delta},
                       {"preset", spec.preset},
                       {"depth", spec.config.depth},
                       {"t_slack", spec.config.t_slack},
                       {"cluster_exponent", spec.config.cluster_exponent},
                       {"trials", spec.trials},
                       {"seed", spec.config.seed},
                       {"threads", spec.threads}};
    if (spec.a_override) j["a"] = *spec.a_override;
    if (spec.b_override) j["b"] = *spec.b_override;
    if (spec.empirical_samples) j["empirical_samples"] = *spec.empirical_samples;
}

void from_json(const nlohmann::json& j, ExperimentSpec& spec) {
    try {
        spec.instance = j.at("instance").get<InstanceSpec>();
        spec.estimators = j.at("estimators").get<std::vector<std::string>>();
        spec.config.eps = j.at("eps").get<double>();
        spec.config.delta = j.at("delta").get<double>();
        spec.preset = j.value("preset", std::string("practical"));
        spec.config.depth = j.value("depth", 1);
        spec.config.t_slack = j.value("t_slack", 2);
        spec.config.cluster_exponent = j.value("cluster_exponent", 0.5);
        spec.trials = j.value("trials", std::size_t{100});
        spec.config.seed = j.value("seed", std::uint64_t{0});
        spec.threads = j.value("threads", 0u);
        if (j.contains("a")) spec.a_override = j.at("a").get<double>();
        if (j.contains("b")) spec.b_override = j.at("b").get<double>();
        if (j.contains("empirical_samples"))
            spec.empirical_samples = j.at("empirical_samples").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("experiment config: ") + e.what());
    }
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json summaries = nlohmann::json::array();
    for (const EstimatorSummary& s : report.summaries) {
        summaries.push_back({{"estimator", s.estimator},
                             {"trials", s.trials},
                             {"success_rate", s.success_rate},
                             {"mean_ratio", s.mean_ratio},
                             {"p50_ratio", s.p50_ratio},
                             {"p90_ratio", s.p90_ratio},
                             {"max_ratio", s.max_ratio},
                             {"mean_t_sample_ns", s.mean_t_sample_ns},
                             {"mean_t_agg_ns", s.mean_t_agg_ns},
                             {"samples_per_trial", s.samples_per_trial}});
    }
    return nlohmann::json{{"config", report.spec}, {"summaries", summaries}};
}

namespace {

// Median wall time of single calls after one warmup. Uniform single-call
// measurement keeps cache behavior comparable across sizes; the slope fit
// would otherwise flatter the small sizes, which get hot-loop treatment
// under repeat-until-deadline timing.
template <typename F>
double measure_median_ns(F&& fn, std::size_t reps) {
    fn();  // warmup, discarded
    std::vector<double> times(std::max<std::size_t>(reps, 5));
    for (double& t : times) {
        const auto start = now_ns();
        fn();
        t = static_cast<double>(now_ns() - start);
    }
    return median_1d(std::move(times));
}

double loglog_slope(const std::vector<BenchPoint>& pts) {
    const double n = static_cast<double>(pts.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const BenchPoint& p : pts) {
        const double x = std::log(static_cast<double>(p.m));
        const double y = std::log(p.median_ns);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::vector<BenchSeries> run_scaling_bench(const BenchSpec& spec) {
    if (spec.sizes.size() < 2)
        throw ConfigError("bench: need at least two sizes");
    for (std::size_t i = 1; i < spec.sizes.size(); ++i)
        if (spec.sizes[i] <= spec.sizes[i - 1])
            throw ConfigError("bench: sizes must be ascending");

    std::vector<BenchSeries> series(3);
    series[0].aggregator = "compute_winner";
    series[1].aggregator = "minsum_depth1";
    series[2].aggregator = "fastgd";

    for (const std::size_t m : spec.sizes) {
        PointSet candidates(m, spec.dim);
        Rng rng = Rng(spec.seed).substream(m);
        for (double& x : candidates.data()) x = rng.normal();

        series[0].points.push_back(
            {m, measure_median_ns(
                    [&] { keep(compute_winner_detail(candidates).D); },
                    spec.reps)});
        series[1].points.push_back(
            {m, measure_median_ns(
                    [&] { keep(minsum_select(candidates, 1).front()); },
                    spec.reps)});
        series[2].points.push_back(
            {m, measure_median_ns(
                    [&] { keep(fastgd(candidates, 2).first.front()); },
                    spec.reps)});
    }
    for (BenchSeries& s : series) s.slope = loglog_slope(s.points);
    return series;
}

nlohmann::json bench_to_json(const std::vector<BenchSeries>& series) {
    nlohmann::json out = nlohmann::json::array();
    for (const BenchSeries& s : series) {
        nlohmann::json pts = nlohmann::json::array();
        for (const BenchPoint& p : s.points)
            pts.push_back({{"m", p.m}, {"median_ns", p.median_ns}});
        out.push_back({{"aggregator", s.aggregator},
                       {"points", pts},
                       {"slope", s.slope}});
    }
    return out;
}

}  // namespace meanest
