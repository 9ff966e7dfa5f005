#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace meanest {

/// A point in R^d. Coordinates are plain 64-bit floats.
using Point = std::vector<double>;

/// Dense set of n points of identical dimension d, stored row-major.
/// Shared read-only across trial workers; all mutation happens before use.
class PointSet {
public:
    PointSet(std::size_t n, std::size_t dim);

    static PointSet from_rows(const std::vector<Point>& rows);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * dim_, dim_};
    }
    Point row_point(std::size_t i) const {
        auto r = row(i);
        return Point(r.begin(), r.end());
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    /// Copy of the contiguous row range [begin, end).
    PointSet slice(std::size_t begin, std::size_t end) const;

    /// Throws std::invalid_argument on NaN/Inf coordinates.
    void check_finite() const;

private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<double> data_;
};

/// Exact mean and optimal cost of a ground set, attached by generators and
/// used by the harness to score estimates without rescanning the points.
struct CostOracle {
    Point mean;
    double opt = 0.0;   // sum of squared distances to the mean
    std::size_t n = 0;
};

// Small vector kernels shared by every aggregator.
double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace meanest
