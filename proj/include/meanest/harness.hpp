#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "meanest/config.hpp"
#include "meanest/instances.hpp"
#include "meanest/point_set.hpp"
#include "meanest/rng.hpp"

namespace meanest {

enum class Method { fastgd, minsum, gmom, empirical, coordmed };

Method method_from_name(const std::string& name);  // ConfigError on unknown
std::string method_name(Method m);

/// One estimator run: output point plus phase timings and sample accounting.
struct EstimateResult {
    Point point;
    std::size_t samples = 0;
    std::int64_t t_sample_ns = 0;
    std::int64_t t_agg_ns = 0;
};

/// Runs one estimator on A. `empirical_samples` overrides the sample budget
/// of the plain empirical-mean baseline (default: the batched budget m*s).
EstimateResult run_estimator(Method method, const PointSet& A,
                             const EstimatorConfig& cfg, const Rng& rng,
                             std::optional<std::size_t> empirical_samples = {});

struct TrialRecord {
    std::uint64_t trial_id = 0;
    std::string estimator;
    std::string instance;
    double eps = 0.0;
    double delta = 0.0;
    std::size_t samples = 0;
    double approx_ratio = 1.0;
    bool success = false;
    std::int64_t t_sample_ns = 0;
    std::int64_t t_agg_ns = 0;
};

struct EstimatorSummary {
    std::string estimator;
    std::size_t trials = 0;
    double success_rate = 0.0;
    double mean_ratio = 0.0;
    double p50_ratio = 0.0;
    double p90_ratio = 0.0;
    double max_ratio = 0.0;
    double mean_t_sample_ns = 0.0;
    double mean_t_agg_ns = 0.0;
    std::size_t samples_per_trial = 0;
};

struct ExperimentSpec {
    InstanceSpec instance;
    std::vector<std::string> estimators;
    EstimatorConfig config;
    std::string preset = "practical";  // practical | paper
    std::optional<double> a_override;  // beats the preset when set
    std::optional<double> b_override;
    std::size_t trials = 100;
    std::optional<std::size_t> empirical_samples;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Preset and overrides applied per method; the "paper" preset uses
/// different constants for the gradient-descent and order-statistics
/// aggregators.
EstimatorConfig resolved_config(const ExperimentSpec& spec, Method method);

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<TrialRecord> trials;  // ordered by trial_id
    std::vector<EstimatorSummary> summaries;
};

/// Runs spec.trials independent trials per estimator over a worker pool.
/// Trial t uses rng substream t, so statistical fields are byte-identical
/// across runs and schedules; only timings vary.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// CSV schema, in column order:
/// trial_id,estimator,instance,eps,delta,samples,approx_ratio,success,t_sample_ns,t_agg_ns
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials);

nlohmann::json report_to_json(const ExperimentReport& report);

void from_json(const nlohmann::json& j, ExperimentSpec& spec);
void to_json(nlohmann::json& j, const ExperimentSpec& spec);

/// Scaling benchmark: median aggregate-phase time over repetitions per
/// candidate-set size, with a least-squares log-log slope per aggregator.
struct BenchPoint {
    std::size_t m = 0;
    double median_ns = 0.0;
};

struct BenchSeries {
    std::string aggregator;  // compute_winner | minsum_depth1 | fastgd
    std::vector<BenchPoint> points;
    double slope = 0.0;
};

struct BenchSpec {
    std::vector<std::size_t> sizes = {256, 1024, 4096};
    std::size_t dim = 16;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
};

std::vector<BenchSeries> run_scaling_bench(const BenchSpec& spec);

nlohmann::json bench_to_json(const std::vector<BenchSeries>& series);

}  // namespace meanest
