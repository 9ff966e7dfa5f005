#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "meanest/point_set.hpp"

namespace meanest {

/// A materialized ground set with its exact oracle.
struct Instance {
    std::string id;
    PointSet points;
    CostOracle oracle;
};

/// Declarative instance description, as read from experiment configs and the
/// gen subcommand. params are kind-specific (validated on construction).
struct InstanceSpec {
    std::string kind;       // two_point_lb | empirical_mean_lb | gaussian |
                            // two_cluster | pareto_tail
    nlohmann::json params;
    std::uint64_t seed = 0;
};

/// n points at 0 and floor(eps*n) points at 1 on the line. The optimal mean
/// sits at eps'/(1+eps') with eps' = floor(eps*n)/n; outputting 0 costs
/// exactly (1+eps') times the optimum.
Instance gen_two_point_lb(std::size_t n, double eps);

/// Symmetric three-atom set: a 1/(2*S^2*eps)-fraction of `total` at each of
/// -S*sqrt(eps) and +S*sqrt(eps) (spike counts rounded to nearest, min 1),
/// the rest at 0. Mean 0, average cost 1 up to spike-count rounding.
Instance gen_empirical_mean_lb(std::size_t total, std::size_t sample_size,
                               double eps);

Instance gen_gaussian(std::size_t n, std::size_t dim, double sigma,
                      std::uint64_t seed);

/// Two equal-size clusters at +/- separation * e1 with Gaussian jitter.
Instance gen_two_cluster(std::size_t n, std::size_t dim, double separation,
                         double sigma, std::uint64_t seed);

/// Heavy-tailed cloud: Pareto(alpha) radii in uniformly random directions.
Instance gen_pareto_tail(std::size_t n, std::size_t dim, double alpha,
                         std::uint64_t seed);

/// Dispatch on spec.kind. Throws ConfigError for unknown kinds or bad params.
Instance make_instance(const InstanceSpec& spec);

void to_json(nlohmann::json& j, const InstanceSpec& spec);
void from_json(const nlohmann::json& j, InstanceSpec& spec);

}  // namespace meanest
