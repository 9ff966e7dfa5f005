#pragma once

#include <cstddef>
#include <cstdint>

namespace meanest {

/// All estimator tunables.
///
/// a controls the per-batch sample size s = ceil(a / eps); b controls the
/// batch count m = ceil(b * ln(1/delta)). Logarithms of 1/delta are natural
/// throughout.
struct EstimatorConfig {
    double eps = 0.5;
    double delta = 0.1;
    double a = 40.0;
    double b = 10.0;
    std::uint64_t seed = 0;
    int t_slack = 2;        // extra gradient-descent iterations
    int depth = 1;          // MinSumSelect recursion depth
    double cluster_exponent = 0.5;  // clusters per level = ceil(|P|^exponent)

    std::size_t batch_count() const;  // m, at least 1
    std::size_t batch_size() const;   // s
    std::size_t total_samples() const { return batch_count() * batch_size(); }

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Reduced constants used for desk-scale Monte Carlo experiments.
EstimatorConfig practical_preset(double eps, double delta);

/// Conservative constants for the gradient-descent aggregator (a=1440, b=50).
EstimatorConfig paper_preset_gd(double eps, double delta);

/// Conservative constants for the order-statistics aggregator at recursion
/// depth i:
/// a = ceil(2 * 25^(i+1) * (10/3)^(i+1)), b = 3.
EstimatorConfig paper_preset_minsum(double eps, double delta, int depth);

}  // namespace meanest
