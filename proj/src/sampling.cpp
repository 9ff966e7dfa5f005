#include "meanest/sampling.hpp"

#include <stdexcept>

namespace meanest {

namespace {

// Mean of `count` uniform-with-replacement draws, via the shared mean kernel.
Point sample_batch_mean(const PointSet& A, std::size_t count, Rng& rng) {
    PointSet batch(count, A.dim());
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t idx = rng.uniform_index(A.size());
        auto src = A.row(idx);
        auto dst = batch.row(i);
        for (std::size_t k = 0; k < A.dim(); ++k) dst[k] = src[k];
    }
    return mean(batch);
}

}  // namespace

CandidateMeans draw_candidate_means(const PointSet& A,
                                    const EstimatorConfig& cfg,
                                    const Rng& rng) {
    cfg.validate();
    const std::size_t m = cfg.batch_count();
    const std::size_t s = cfg.batch_size();
    CandidateMeans out{PointSet(m, A.dim()), s};
    for (std::size_t i = 0; i < m; ++i) {
        Rng stream = rng.substream(i);
        const Point mu = sample_batch_mean(A, s, stream);
        auto dst = out.means.row(i);
        for (std::size_t k = 0; k < A.dim(); ++k) dst[k] = mu[k];
    }
    return out;
}

Point empirical_mean_estimate(const PointSet& A, std::size_t sample_size,
                              Rng rng) {
    if (sample_size == 0)
        throw std::invalid_argument("empirical_mean_estimate: sample_size >= 1");
    return sample_batch_mean(A, sample_size, rng);
}

}  // namespace meanest
