#include "meanest/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "meanest/core_ops.hpp"
#include "meanest/fastgd.hpp"

namespace meanest {

namespace {

double objective(const PointSet& P, std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i) s += distance(x, P.row(i));
    return s;
}

}  // namespace

WeiszfeldResult weiszfeld(const PointSet& P, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("weiszfeld: tol must be > 0");
    const std::size_t m = P.size();
    const std::size_t dim = P.dim();
    const double grad_tau = gradient_stop_threshold(m);

    WeiszfeldResult res;
    res.point = coordinate_median(P);
    res.objective.push_back(objective(P, res.point));

    std::vector<double> dist(m);
    for (std::size_t it = 0; it < max_iter; ++it) {
        Point& x = res.point;
        const double tau = colocation_threshold(x);

        std::size_t anchors = 0;      // input points co-located with x
        std::size_t anchor_idx = 0;
        Point r(dim, 0.0);            // gradient over non-co-located points
        Point t_num(dim, 0.0);
        double t_den = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            auto p = P.row(i);
            dist[i] = distance(x, p);
            if (dist[i] < tau) {
                ++anchors;
                anchor_idx = i;
                continue;
            }
            const double inv = 1.0 / dist[i];
            for (std::size_t k = 0; k < dim; ++k) {
                r[k] += (x[k] - p[k]) * inv;
                t_num[k] += p[k] * inv;
            }
            t_den += inv;
        }
        const double rnorm = norm(r);
        res.gradient_norm = rnorm;
        res.iterations = it;

        if (anchors > 0 && rnorm <= static_cast<double>(anchors)) {
            // anchor optimality condition of the modified iteration
            res.point = P.row_point(anchor_idx);
            res.anchor_certified = true;
            return res;
        }
        if (rnorm < grad_tau) return res;

        Point next(dim);
        if (anchors == 0) {
            for (std::size_t k = 0; k < dim; ++k) next[k] = t_num[k] / t_den;
        } else {
            // damped step off the anchor
            const double lambda = static_cast<double>(anchors) / rnorm;
            for (std::size_t k = 0; k < dim; ++k)
                next[k] = (1.0 - lambda) * (t_num[k] / t_den) + lambda * x[k];
        }

        const double move = distance(next, x);
        x = std::move(next);
        res.objective.push_back(objective(P, x));
        if (move <= tol * (1.0 + norm(x))) {
            res.iterations = it + 1;
            res.gradient_norm = norm(geo_median_gradient(x, P));
            return res;
        }
    }
    res.hit_max_iter = true;
    res.iterations = max_iter;
    res.gradient_norm = norm(geo_median_gradient(res.point, P));
    return res;
}

Point geometric_median_of_means(const PointSet& A, const EstimatorConfig& cfg,
                                const Rng& rng) {
    const CandidateMeans cm = draw_candidate_means(A, cfg, rng);
    return weiszfeld(cm.means).point;
}

Point coordinate_median_of_means(const PointSet& A, const EstimatorConfig& cfg,
                                 const Rng& rng) {
    const CandidateMeans cm = draw_candidate_means(A, cfg, rng);
    return coordinate_median(cm.means);
}

}  // namespace meanest
