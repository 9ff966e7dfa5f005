#include "meanest/minsum.hpp"

#include <cmath>
#include <stdexcept>

#include "meanest/core_ops.hpp"

namespace meanest {

namespace {

std::size_t truncation_count(std::size_t m) {
    return (7 * m + 9) / 10;  // ceil(0.7 * m)
}

}  // namespace

std::vector<double> truncated_distance_sums(const PointSet& P) {
    const std::size_t m = P.size();
    const std::size_t t = truncation_count(m);
    std::vector<double> sums(m);
    std::vector<double> dists(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto pj = P.row(j);
        for (std::size_t i = 0; i < m; ++i)
            dists[i] = i == j ? 0.0 : distance(pj, P.row(i));
        sums[j] = sum_k_smallest(dists, t);
    }
    return sums;
}

WinnerScore compute_winner_detail(const PointSet& P) {
    const std::vector<double> sums = truncated_distance_sums(P);
    WinnerScore best{0, sums[0], truncation_count(P.size())};
    for (std::size_t j = 1; j < sums.size(); ++j) {
        if (sums[j] < best.D) {
            best.index = j;
            best.D = sums[j];
        }
    }
    return best;
}

Point compute_winner(const PointSet& P) {
    return P.row_point(compute_winner_detail(P).index);
}

Point minsum_select(const PointSet& P, int depth, double cluster_exponent) {
    if (depth < 0) throw std::invalid_argument("minsum_select: depth must be >= 0");
    if (depth == 0 || P.size() == 1) return compute_winner(P);

    const std::size_t m = P.size();
    std::size_t clusters = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(m), cluster_exponent)));
    if (clusters < 1) clusters = 1;
    if (clusters > m) clusters = m;

    // contiguous clusters whose sizes differ by at most one
    const std::size_t base = m / clusters;
    const std::size_t extra = m % clusters;
    std::vector<Point> winners;
    winners.reserve(clusters);
    std::size_t begin = 0;
    for (std::size_t c = 0; c < clusters; ++c) {
        const std::size_t size = base + (c < extra ? 1 : 0);
        const PointSet part = P.slice(begin, begin + size);
        winners.push_back(minsum_select(part, depth - 1, cluster_exponent));
        begin += size;
    }
    return compute_winner(PointSet::from_rows(winners));
}

Point minsum_estimate(const CandidateMeans& P, const EstimatorConfig& cfg) {
    return minsum_select(P.means, cfg.depth, cfg.cluster_exponent);
}

}  // namespace meanest
