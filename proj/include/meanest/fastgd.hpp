#pragma once

#include <utility>
#include <vector>

#include "meanest/config.hpp"
#include "meanest/point_set.hpp"
#include "meanest/sampling.hpp"

#include <json.hpp>

namespace meanest {

// Gradient terms from points closer than this to the query are dropped;
// a near-zero gradient certifies an approximate geometric median and stops
// the descent early.
inline double colocation_threshold(std::span<const double> q) {
    return 1e-12 * (1.0 + norm(q));
}
inline double gradient_stop_threshold(std::size_t m) { return 1e-9 * static_cast<double>(m); }

/// Iterates and gradient norms of one gradient-descent run.
/// iterates[0] is the coordinate-wise median of the candidates; every later
/// iterate lies on the line through its predecessor along minus the gradient.
struct GDTrace {
    std::vector<Point> iterates;
    std::vector<double> gradient_norms;
    bool terminated_early = false;
};

void to_json(nlohmann::json& j, const GDTrace& trace);

/// Gradient of the geometric-median objective sum_p |q - p| at q:
/// the sum of unit vectors (q - p) / |q - p| over candidates not co-located
/// with q. Fixed summation order, so the result is schedule-independent.
Point geo_median_gradient(std::span<const double> q, const PointSet& P);

/// Line search along {c - s * grad}: projects every candidate onto the line
/// (s_i = <p_i - c, -grad> / |grad|^2) and steps to the 1-d median of the
/// projection scalars. Requires |grad| > 0.
Point line_median_step(std::span<const double> c, std::span<const double> grad,
                       const PointSet& P);

/// Gradient descent on the geometric-median objective over the candidate
/// means, initialized at their coordinate-wise median.
/// T = ceil(ln(max(2, m)) / ln(10/7)) + t_slack iterations, stopping early
/// when the gradient norm falls below gradient_stop_threshold(m).
std::pair<Point, GDTrace> fastgd(const PointSet& candidates, int t_slack);

std::pair<Point, GDTrace> fastgd(const CandidateMeans& P,
                                 const EstimatorConfig& cfg);

}  // namespace meanest
