#pragma once

#include "meanest/config.hpp"
#include "meanest/core_ops.hpp"
#include "meanest/point_set.hpp"
#include "meanest/rng.hpp"

namespace meanest {

/// The m batch means produced by the sampling stage, one point per batch.
struct CandidateMeans {
    PointSet means;
    std::size_t batch_size = 0;

    std::size_t count() const { return means.size(); }
};

/// Draws m batches of s indices uniformly with replacement from A and returns
/// their empirical means. Batch i consumes rng.substream(i), so the result is
/// a pure function of (A, cfg, rng seed) independent of evaluation order.
CandidateMeans draw_candidate_means(const PointSet& A,
                                    const EstimatorConfig& cfg, const Rng& rng);

/// Plain subsample mean over `sample_size` uniform draws with replacement.
Point empirical_mean_estimate(const PointSet& A, std::size_t sample_size,
                              Rng rng);

}  // namespace meanest
