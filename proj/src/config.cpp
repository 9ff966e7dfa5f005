#include "meanest/config.hpp"

#include <cmath>
#include <stdexcept>

namespace meanest {

std::size_t EstimatorConfig::batch_count() const {
    const double m = std::ceil(b * std::log(1.0 / delta));
    return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

std::size_t EstimatorConfig::batch_size() const {
    return static_cast<std::size_t>(std::ceil(a / eps));
}

void EstimatorConfig::validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("config: eps must be > 0");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("config: delta must be in (0,1)");
    if (!(a >= 1.0)) throw std::invalid_argument("config: a must be >= 1");
    if (!(b >= 1.0)) throw std::invalid_argument("config: b must be >= 1");
    if (t_slack < 0) throw std::invalid_argument("config: t_slack must be >= 0");
    if (depth < 0) throw std::invalid_argument("config: depth must be >= 0");
    if (!(cluster_exponent > 0.0 && cluster_exponent < 1.0))
        throw std::invalid_argument("config: cluster_exponent must be in (0,1)");
}

EstimatorConfig practical_preset(double eps, double delta) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.delta = delta;
    cfg.a = 40.0;
    cfg.b = 10.0;
    return cfg;
}

EstimatorConfig paper_preset_gd(double eps, double delta) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.delta = delta;
    cfg.a = 1440.0;
    cfg.b = 50.0;
    return cfg;
}

EstimatorConfig paper_preset_minsum(double eps, double delta, int depth) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.delta = delta;
    cfg.a = std::ceil(2.0 * std::pow(25.0, depth + 1) *
                      std::pow(10.0 / 3.0, depth + 1));
    cfg.b = 3.0;
    cfg.depth = depth;
    return cfg;
}

}  // namespace meanest
