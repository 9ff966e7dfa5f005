#include "meanest/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace meanest {

PointSet::PointSet(std::size_t n, std::size_t dim)
    : n_(n), dim_(dim), data_(n * dim, 0.0) {
    if (n == 0) throw std::invalid_argument("PointSet: n must be >= 1");
    if (dim == 0) throw std::invalid_argument("PointSet: dim must be >= 1");
}

PointSet PointSet::from_rows(const std::vector<Point>& rows) {
    if (rows.empty())
        throw std::invalid_argument("PointSet::from_rows: empty input");
    PointSet out(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != out.dim_)
            throw std::invalid_argument(
                "PointSet::from_rows: inconsistent dimensions");
        auto r = out.row(i);
        for (std::size_t k = 0; k < out.dim_; ++k) r[k] = rows[i][k];
    }
    out.check_finite();
    return out;
}

PointSet PointSet::slice(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > n_)
        throw std::invalid_argument("PointSet::slice: bad range");
    PointSet out(end - begin, dim_);
    std::copy(data_.begin() + begin * dim_, data_.begin() + end * dim_,
              out.data_.begin());
    return out;
}

void PointSet::check_finite() const {
    for (double x : data_)
        if (!std::isfinite(x))
            throw std::invalid_argument("PointSet: non-finite coordinate");
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace meanest
