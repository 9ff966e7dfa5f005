#include "meanest/instances.hpp"

#include <cmath>
#include <sstream>

#include "meanest/core_ops.hpp"
#include "meanest/errors.hpp"
#include "meanest/rng.hpp"

namespace meanest {

namespace {

// CSV-safe id: kind plus key=value pairs, no commas or quotes.
std::string format_id(const std::string& kind, const nlohmann::json& params) {
    std::ostringstream os;
    os << kind;
    for (const auto& [key, value] : params.items())
        os << ':' << key << '=' << value.dump();
    return os.str();
}

}  // namespace

Instance gen_two_point_lb(std::size_t n, double eps) {
    if (n < 1 || !(eps > 0.0))
        throw std::invalid_argument("two_point_lb: need n >= 1 and eps > 0");
    const std::size_t ones = static_cast<std::size_t>(std::floor(eps * static_cast<double>(n)));
    if (ones < 1)
        throw std::invalid_argument("two_point_lb: eps*n must be >= 1");
    const std::size_t total = n + ones;

    PointSet points(total, 1);
    for (std::size_t i = n; i < total; ++i) points.row(i)[0] = 1.0;

    // exact from counts: mean = ones/total, OPT = n*ones/total
    CostOracle oracle;
    const double mu = static_cast<double>(ones) / static_cast<double>(total);
    oracle.mean = {mu};
    oracle.opt = static_cast<double>(n) * static_cast<double>(ones) /
                 static_cast<double>(total);
    oracle.n = total;

    nlohmann::json params{{"n", n}, {"eps", eps}};
    return {format_id("two_point_lb", params), std::move(points), std::move(oracle)};
}

Instance gen_empirical_mean_lb(std::size_t total, std::size_t sample_size,
                               double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("empirical_mean_lb: eps must be in (0,1)");
    const double s = static_cast<double>(sample_size);
    if (!(s * s * eps > 1.0))
        throw std::invalid_argument("empirical_mean_lb: need sample_size^2 * eps > 1");
    const double fraction = 1.0 / (2.0 * s * s * eps);
    if (fraction * static_cast<double>(total) < 1.0)
        throw std::invalid_argument(
            "empirical_mean_lb: total too small, the spike fraction yields "
            "no points");
    std::size_t spike = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(total)));
    if (spike < 1) spike = 1;
    if (2 * spike >= total)
        throw std::invalid_argument(
            "empirical_mean_lb: total too small for the spike fraction");

    const double v = s * std::sqrt(eps);
    PointSet points(total, 1);
    for (std::size_t i = 0; i < spike; ++i) points.row(i)[0] = -v;
    for (std::size_t i = spike; i < 2 * spike; ++i) points.row(i)[0] = v;

    CostOracle oracle;
    oracle.mean = {0.0};
    oracle.opt = 2.0 * static_cast<double>(spike) * v * v;
    oracle.n = total;

    nlohmann::json params{{"total", total}, {"sample_size", sample_size}, {"eps", eps}};
    return {format_id("empirical_mean_lb", params), std::move(points),
            std::move(oracle)};
}

Instance gen_gaussian(std::size_t n, std::size_t dim, double sigma,
                      std::uint64_t seed) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian: sigma must be >= 0");
    PointSet points(n, dim);
    Rng rng = Rng(seed).substream(0x6761757373ull);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = points.row(i);
        for (std::size_t k = 0; k < dim; ++k) r[k] = rng.normal(0.0, sigma);
    }
    nlohmann::json params{{"n", n}, {"d", dim}, {"sigma", sigma}, {"seed", seed}};
    CostOracle oracle = exact_oracle(points);
    return {format_id("gaussian", params), std::move(points), std::move(oracle)};
}

Instance gen_two_cluster(std::size_t n, std::size_t dim, double separation,
                         double sigma, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("two_cluster: n must be even and >= 2");
    if (sigma < 0.0) throw std::invalid_argument("two_cluster: sigma must be >= 0");
    PointSet points(n, dim);
    Rng rng = Rng(seed).substream(0x636c7573ull);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = points.row(i);
        const double center = i < n / 2 ? separation : -separation;
        r[0] = center + (sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0);
        for (std::size_t k = 1; k < dim; ++k)
            r[k] = sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0;
    }
    nlohmann::json params{{"n", n}, {"d", dim}, {"separation", separation},
                          {"sigma", sigma}, {"seed", seed}};
    CostOracle oracle = exact_oracle(points);
    return {format_id("two_cluster", params), std::move(points), std::move(oracle)};
}

Instance gen_pareto_tail(std::size_t n, std::size_t dim, double alpha,
                         std::uint64_t seed) {
    if (!(alpha > 0.0)) throw std::invalid_argument("pareto_tail: alpha must be > 0");
    PointSet points(n, dim);
    Rng rng = Rng(seed).substream(0x706172ull);
    Point dir(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_double();
        const double radius = std::pow(1.0 - u, -1.0 / alpha);
        double d2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            dir[k] = rng.normal();
            d2 += dir[k] * dir[k];
        }
        const double scale = radius / std::sqrt(d2 > 0.0 ? d2 : 1.0);
        auto r = points.row(i);
        for (std::size_t k = 0; k < dim; ++k) r[k] = dir[k] * scale;
    }
    nlohmann::json params{{"n", n}, {"d", dim}, {"alpha", alpha}, {"seed", seed}};
    CostOracle oracle = exact_oracle(points);
    return {format_id("pareto_tail", params), std::move(points), std::move(oracle)};
}

namespace {

template <typename T>
T param(const nlohmann::json& params, const char* key) {
    if (!params.contains(key))
        throw ConfigError(std::string("instance params: missing \"") + key + "\"");
    try {
        return params.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("instance params: bad value for \"") + key + "\"");
    }
}

template <typename T>
T param_or(const nlohmann::json& params, const char* key, T fallback) {
    return params.contains(key) ? param<T>(params, key) : fallback;
}

}  // namespace

Instance make_instance(const InstanceSpec& spec) {
    try {
        if (spec.kind == "two_point_lb")
            return gen_two_point_lb(param<std::size_t>(spec.params, "n"),
                                    param<double>(spec.params, "eps"));
        if (spec.kind == "empirical_mean_lb")
            return gen_empirical_mean_lb(param<std::size_t>(spec.params, "total"),
                                         param<std::size_t>(spec.params, "sample_size"),
                                         param<double>(spec.params, "eps"));
        if (spec.kind == "gaussian")
            return gen_gaussian(param<std::size_t>(spec.params, "n"),
                                param<std::size_t>(spec.params, "d"),
                                param_or<double>(spec.params, "sigma", 1.0),
                                spec.seed);
        if (spec.kind == "two_cluster")
            return gen_two_cluster(param<std::size_t>(spec.params, "n"),
                                   param<std::size_t>(spec.params, "d"),
                                   param_or<double>(spec.params, "separation", 1.0),
                                   param_or<double>(spec.params, "sigma", 0.0),
                                   spec.seed);
        if (spec.kind == "pareto_tail")
            return gen_pareto_tail(param<std::size_t>(spec.params, "n"),
                                   param<std::size_t>(spec.params, "d"),
                                   param_or<double>(spec.params, "alpha", 2.5),
                                   spec.seed);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown instance kind: " + spec.kind);
}

void to_json(nlohmann::json& j, const InstanceSpec& spec) {
    j = nlohmann::json{{"kind", spec.kind}, {"params", spec.params}, {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, InstanceSpec& spec) {
    spec.kind = j.at("kind").get<std::string>();
    spec.params = j.value("params", nlohmann::json::object());
    spec.seed = j.value("seed", std::uint64_t{0});
}

}  // namespace meanest
