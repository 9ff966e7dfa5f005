#include "meanest/fastgd.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "meanest/core_ops.hpp"

namespace meanest {

Point geo_median_gradient(std::span<const double> q, const PointSet& P) {
    if (q.size() != P.dim())
        throw std::invalid_argument("geo_median_gradient: dimension mismatch");
    const double tau = colocation_threshold(q);
    Point grad(q.size(), 0.0);
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.row(i);
        const double d = distance(q, p);
        if (d < tau) continue;
        for (std::size_t k = 0; k < q.size(); ++k)
            grad[k] += (q[k] - p[k]) / d;
    }
    return grad;
}

Point line_median_step(std::span<const double> c, std::span<const double> grad,
                       const PointSet& P) {
    const double g2 = dot(grad, grad);
    if (!(g2 > 0.0))
        throw std::invalid_argument("line_median_step: zero gradient");
    std::vector<double> scalars(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        auto p = P.row(i);
        double s = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k)
            s += (p[k] - c[k]) * (-grad[k]);
        scalars[i] = s / g2;
    }
    const double step = median_1d(std::move(scalars));
    Point out(c.begin(), c.end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= step * grad[k];
    return out;
}

std::pair<Point, GDTrace> fastgd(const PointSet& candidates, int t_slack) {
    const std::size_t m = candidates.size();
    const double m_eff = static_cast<double>(m < 2 ? 2 : m);
    const std::size_t iters =
        static_cast<std::size_t>(std::ceil(std::log(m_eff) / std::log(10.0 / 7.0))) +
        static_cast<std::size_t>(t_slack);
    const double grad_tau = gradient_stop_threshold(m);

    GDTrace trace;
    Point c = coordinate_median(candidates);
    trace.iterates.push_back(c);

    for (std::size_t j = 0; j < iters; ++j) {
        const Point grad = geo_median_gradient(c, candidates);
        const double gnorm = norm(grad);
        trace.gradient_norms.push_back(gnorm);
        if (gnorm < grad_tau) {
            trace.terminated_early = true;
            break;
        }
        c = line_median_step(c, grad, candidates);
        trace.iterates.push_back(c);
    }
    return {c, std::move(trace)};
}

std::pair<Point, GDTrace> fastgd(const CandidateMeans& P,
                                 const EstimatorConfig& cfg) {
    return fastgd(P.means, cfg.t_slack);
}

void to_json(nlohmann::json& j, const GDTrace& trace) {
    j = nlohmann::json{{"gradient_norms", trace.gradient_norms},
                       {"terminated_early", trace.terminated_early},
                       {"iterations", trace.iterates.size() - 1}};
    j["iterates"] = trace.iterates;
}

}  // namespace meanest
