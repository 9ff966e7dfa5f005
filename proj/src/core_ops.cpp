#include "meanest/core_ops.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace meanest {

namespace {

constexpr std::size_t kPairwiseBlock = 16;

// Pairwise sum of rows [lo, hi) into acc (length dim). Splits at midpoints,
// which also makes symmetric sets cancel exactly.
void pairwise_row_sum(const PointSet& A, std::size_t lo, std::size_t hi,
                      double* acc) {
    const std::size_t dim = A.dim();
    if (hi - lo <= kPairwiseBlock) {
        for (std::size_t k = 0; k < dim; ++k) acc[k] = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            auto r = A.row(i);
            for (std::size_t k = 0; k < dim; ++k) acc[k] += r[k];
        }
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<double> right(dim);
    pairwise_row_sum(A, lo, mid, acc);
    pairwise_row_sum(A, mid, hi, right.data());
    for (std::size_t k = 0; k < dim; ++k) acc[k] += right[k];
}

double pairwise_cost_sum(const PointSet& A, std::span<const double> c,
                         std::size_t lo, std::size_t hi) {
    if (hi - lo <= kPairwiseBlock) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            s += squared_distance(A.row(i), c);
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_cost_sum(A, c, lo, mid) + pairwise_cost_sum(A, c, mid, hi);
}

void require_dim(const PointSet& A, std::span<const double> c,
                 const char* who) {
    if (c.size() != A.dim())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

Point mean(const PointSet& A) {
    Point acc(A.dim());
    pairwise_row_sum(A, 0, A.size(), acc.data());
    for (double& x : acc) x /= static_cast<double>(A.size());
    return acc;
}

double cost(const PointSet& A, std::span<const double> c) {
    require_dim(A, c, "cost");
    return pairwise_cost_sum(A, c, 0, A.size());
}

CostOracle exact_oracle(const PointSet& A) {
    CostOracle o;
    o.mean = mean(A);
    o.opt = cost(A, o.mean);
    o.n = A.size();
    return o;
}

std::pair<double, double> decomposition_check(const PointSet& A,
                                              std::span<const double> c) {
    require_dim(A, c, "decomposition_check");
    const Point mu = mean(A);
    const double lhs = cost(A, c);
    const double rhs = cost(A, mu) +
                       static_cast<double>(A.size()) * squared_distance(mu, c);
    return {lhs, rhs};
}

bool is_eps_approx(const CostOracle& oracle, std::span<const double> c,
                   double eps) {
    if (eps <= 0.0) throw std::invalid_argument("is_eps_approx: eps must be > 0");
    const double d2 = squared_distance(c, oracle.mean);
    if (oracle.opt <= 0.0) {
        const double tau = 1e-12 * (1.0 + norm(oracle.mean));
        return d2 <= tau * tau;
    }
    if (d2 == 0.0) return true;
    const double threshold = eps * oracle.opt / static_cast<double>(oracle.n);
    return d2 < threshold * (1.0 - 1e-9);
}

double approx_ratio(const CostOracle& oracle, std::span<const double> c) {
    const double d2 = squared_distance(c, oracle.mean);
    if (oracle.opt <= 0.0) {
        const double tau = 1e-12 * (1.0 + norm(oracle.mean));
        return d2 <= tau * tau ? 1.0
                               : std::numeric_limits<double>::infinity();
    }
    return 1.0 + static_cast<double>(oracle.n) * d2 / oracle.opt;
}

namespace {

void insertion_sort(double* a, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i) {
        const double x = a[i];
        std::size_t j = i;
        while (j > 0 && a[j - 1] > x) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = x;
    }
}

double median_of_5(double* a) {
    insertion_sort(a, 5);
    return a[2];
}

// Median-of-medians pivot value; mutates the range.
double deterministic_pivot(double* a, std::size_t n) {
    if (n <= 5) {
        insertion_sort(a, n);
        return a[n / 2];
    }
    std::size_t groups = 0;
    for (std::size_t i = 0; i + 5 <= n; i += 5) a[groups++] = median_of_5(a + i);
    return deterministic_pivot(a, groups);
}

// 3-way partition by value: returns [lt, gt) such that a[lt..gt) == pivot,
// everything left is smaller, everything right is larger.
std::pair<std::size_t, std::size_t> partition3(double* a, std::size_t n,
                                               double pivot) {
    std::size_t lt = 0, i = 0, gt = n;
    while (i < gt) {
        if (a[i] < pivot)
            std::swap(a[lt++], a[i++]);
        else if (a[i] > pivot)
            std::swap(a[i], a[--gt]);
        else
            ++i;
    }
    return {lt, gt};
}

double median3_value(double x, double y, double z) {
    return std::max(std::min(x, y), std::min(std::max(x, y), z));
}

}  // namespace

double select_kth_inplace(std::span<double> values, std::size_t k) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("select_kth: empty input");
    if (k < 1 || k > n) throw std::invalid_argument("select_kth: rank out of range");

    double* a = values.data();
    std::size_t lo = 0, hi = n;       // active window
    std::size_t target = k - 1;       // 0-based rank
    int budget = 2 * (64 - std::countl_zero(n)) + 2;

    while (hi - lo > kPairwiseBlock) {
        double pivot;
        if (budget-- > 0) {
            pivot = median3_value(a[lo], a[lo + (hi - lo) / 2], a[hi - 1]);
        } else {
            std::vector<double> scratch(a + lo, a + hi);
            pivot = deterministic_pivot(scratch.data(), scratch.size());
        }
        auto [lt, gt] = partition3(a + lo, hi - lo, pivot);
        lt += lo;
        gt += lo;
        if (target < lt)
            hi = lt;
        else if (target >= gt)
            lo = gt;
        else
            return a[target];
    }
    insertion_sort(a + lo, hi - lo);
    return a[target];
}

double select_kth(std::vector<double> values, std::size_t k) {
    return select_kth_inplace(values, k);
}

double sum_k_smallest(std::span<double> values, std::size_t k) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("sum_k_smallest: empty input");
    if (k < 1 || k > n)
        throw std::invalid_argument("sum_k_smallest: rank out of range");

    double* a = values.data();
    std::size_t len = n;
    std::size_t want = k;
    double acc = 0.0;
    int budget = 2 * (64 - std::countl_zero(n)) + 2;

    while (true) {
        if (want == len) {
            for (std::size_t i = 0; i < len; ++i) acc += a[i];
            return acc;
        }
        if (len <= kPairwiseBlock) {
            insertion_sort(a, len);
            for (std::size_t i = 0; i < want; ++i) acc += a[i];
            return acc;
        }
        double pivot;
        if (budget-- > 0) {
            pivot = median3_value(a[0], a[len / 2], a[len - 1]);
        } else {
            std::vector<double> scratch(a, a + len);
            pivot = deterministic_pivot(scratch.data(), scratch.size());
        }
        std::size_t less = 0, leq = 0;
        for (std::size_t i = 0; i < len; ++i) {
            less += a[i] < pivot ? 1 : 0;
            leq += a[i] <= pivot ? 1 : 0;
        }
        if (want < less) {
            // keep the strictly-smaller side, compacted left
            std::size_t w = 0;
            for (std::size_t i = 0; i < len; ++i) {
                const double x = a[i];
                a[w] = x;
                w += x < pivot ? 1 : 0;
            }
            len = less;
        } else if (want <= leq) {
            double below = 0.0;
            for (std::size_t i = 0; i < len; ++i)
                below += a[i] < pivot ? a[i] : 0.0;
            return acc + below +
                   static_cast<double>(want - less) * pivot;
        } else {
            // bank everything <= pivot, keep the larger side
            double below = 0.0;
            std::size_t w = 0;
            for (std::size_t i = 0; i < len; ++i) {
                const double x = a[i];
                below += x <= pivot ? x : 0.0;
                a[w] = x;
                w += x > pivot ? 1 : 0;
            }
            acc += below;
            want -= leq;
            len -= leq;
        }
    }
}

double median_1d(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median_1d: empty input");
    const std::size_t k = (values.size() + 1) / 2;  // lower median
    return select_kth_inplace(values, k);
}

Point coordinate_median(const PointSet& P) {
    Point out(P.dim());
    std::vector<double> column(P.size());
    for (std::size_t k = 0; k < P.dim(); ++k) {
        for (std::size_t i = 0; i < P.size(); ++i) column[i] = P.row(i)[k];
        out[k] = select_kth_inplace(column, (P.size() + 1) / 2);
    }
    return out;
}

}  // namespace meanest
