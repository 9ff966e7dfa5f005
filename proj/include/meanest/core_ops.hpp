#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "meanest/point_set.hpp"

namespace meanest {

/// Coordinate-wise average of A. Pairwise (tree) summation keeps the
/// decomposition identity testable at 1e-9 up to n ~ 1e6.
Point mean(const PointSet& A);

/// Sum of squared Euclidean distances from every point of A to c.
double cost(const PointSet& A, std::span<const double> c);

/// Exact oracle computed from the realized points.
CostOracle exact_oracle(const PointSet& A);

/// Both sides of the mean-variance decomposition:
/// lhs = cost(A, c), rhs = cost(A, mean(A)) + n * |mean(A) - c|^2.
std::pair<double, double> decomposition_check(const PointSet& A,
                                              std::span<const double> c);

/// True iff c is a (1+eps)-approximate mean for the oracle's ground set,
/// i.e. |c - mean|^2 <= eps * opt / n. Exact boundary points do not count:
/// the threshold carries a 1e-9 relative margin so that a point whose cost
/// is exactly (1+eps)*OPT is rejected. A degenerate oracle (opt == 0) accepts
/// only points co-located with the mean up to relative rounding.
bool is_eps_approx(const CostOracle& oracle, std::span<const double> c,
                   double eps);

/// cost(A, c) / OPT computed from the oracle via the decomposition identity.
double approx_ratio(const CostOracle& oracle, std::span<const double> c);

/// k-th smallest element, k is 1-based. Introselect: expected linear with a
/// deterministic median-of-medians fallback, so the worst case stays linear.
double select_kth(std::vector<double> values, std::size_t k);

/// In-place variant. Partially partitions: on return v[i] <= v[k-1] for i < k.
double select_kth_inplace(std::span<double> values, std::size_t k);

/// Sum of the k smallest values; destroys the input order. Branch-free
/// counting/compaction passes keep the per-element cost flat on random data,
/// which the truncated-distance scoring relies on; the deterministic pivot
/// fallback bounds the worst case linearly.
double sum_k_smallest(std::span<double> values, std::size_t k);

/// Lower median: select_kth(values, ceil(len / 2)).
double median_1d(std::vector<double> values);

/// Per-dimension lower median of P.
Point coordinate_median(const PointSet& P);

}  // namespace meanest
