#pragma once

#include <cstddef>
#include <vector>

#include "meanest/config.hpp"
#include "meanest/point_set.hpp"
#include "meanest/rng.hpp"
#include "meanest/sampling.hpp"

namespace meanest {

struct WeiszfeldResult {
    Point point;
    std::size_t iterations = 0;
    bool hit_max_iter = false;
    bool anchor_certified = false;  // stopped at an input point whose
                                    // gradient condition proves optimality
    double gradient_norm = 0.0;
    std::vector<double> objective;  // sum of distances per iterate
};

/// Geometric median by fixed-point iteration, started from the coordinate-wise
/// median. Co-located input points are skipped in the update; when the iterate
/// lands on an input point, the anchor's gradient condition either certifies
/// optimality or the damped step moves off it. Stops when relative movement
/// drops below tol, the gradient certifies the iterate, or max_iter.
WeiszfeldResult weiszfeld(const PointSet& P, double tol = 1e-10,
                          std::size_t max_iter = 10000);

/// Median-of-means estimator: candidate means aggregated by their geometric
/// median.
Point geometric_median_of_means(const PointSet& A, const EstimatorConfig& cfg,
                                const Rng& rng);

/// Comparison baseline: candidate means aggregated by coordinate-wise median.
Point coordinate_median_of_means(const PointSet& A, const EstimatorConfig& cfg,
                                 const Rng& rng);

}  // namespace meanest
