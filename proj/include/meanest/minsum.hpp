#pragma once

#include <cstddef>
#include <vector>

#include "meanest/config.hpp"
#include "meanest/point_set.hpp"
#include "meanest/sampling.hpp"

namespace meanest {

/// Truncated distance sum of the winning candidate: D is the sum of the t
/// smallest distances from the candidate to members of P, self included at
/// distance zero, with t = ceil(0.7 * |P|).
struct WinnerScore {
    std::size_t index = 0;
    double D = 0.0;
    std::size_t t = 0;
};

/// D_j for every candidate. O(|P|^2 * d).
std::vector<double> truncated_distance_sums(const PointSet& P);

/// Candidate minimizing the truncated distance sum; ties break to the
/// smallest index.
WinnerScore compute_winner_detail(const PointSet& P);
Point compute_winner(const PointSet& P);

/// Recursive selection: split P into ceil(|P|^cluster_exponent) contiguous
/// near-equal clusters, recurse at depth-1 on each, then pick the winner of
/// the returned points. depth 0 (or a single point) degenerates to
/// compute_winner. The output is always a member of P.
Point minsum_select(const PointSet& P, int depth,
                    double cluster_exponent = 0.5);

/// MinSumSelect over the candidate means with cfg.depth.
Point minsum_estimate(const CandidateMeans& P, const EstimatorConfig& cfg);

}  // namespace meanest
