#pragma once

// Shared generators for the test suites. Everything is seeded through
// meanest::Rng so failures reproduce exactly.

#include <algorithm>
#include <cmath>
#include <vector>

#include "meanest/core_ops.hpp"
#include "meanest/point_set.hpp"
#include "meanest/rng.hpp"

namespace testgen {

using meanest::Point;
using meanest::PointSet;
using meanest::Rng;

inline PointSet gaussian_cloud(std::size_t n, std::size_t dim, Rng& rng,
                               double sigma = 1.0, double offset = 0.0) {
    PointSet out(n, dim);
    for (double& x : out.data()) x = offset + rng.normal(0.0, sigma);
    return out;
}

inline Point random_point(std::size_t dim, Rng& rng, double scale = 1.0) {
    Point p(dim);
    for (double& x : p) x = rng.normal(0.0, scale);
    return p;
}

inline Point random_unit(std::size_t dim, Rng& rng) {
    Point p = random_point(dim, rng);
    const double n = meanest::norm(p);
    if (n == 0.0) {
        Point e(dim, 0.0);
        e[0] = 1.0;
        return e;
    }
    for (double& x : p) x /= n;
    return p;
}

/// Uniform point in the ball of radius `radius` around `center`.
inline Point in_ball(const Point& center, double radius, Rng& rng) {
    Point dir = random_unit(center.size(), rng);
    const double r =
        radius * std::pow(rng.next_double(), 1.0 / static_cast<double>(center.size()));
    Point p = center;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += r * dir[k];
    return p;
}

inline void shuffle(std::vector<double>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.uniform_index(i)]);
}

/// Adversarial configuration for the contraction/initialization checks:
/// ceil(0.7*m) candidates inside the radius-r ball around mu, the rest placed
/// by one of several hostile layouts selected by `style`.
struct EventEConfig {
    PointSet candidates;
    Point mu;
    double r = 0.0;
};

inline EventEConfig make_event_e(std::size_t m, std::size_t dim, double r,
                                 int style, Rng& rng) {
    const Point mu = random_point(dim, rng, 10.0 * r);
    const std::size_t good = (7 * m + 9) / 10;  // ceil(0.7*m)
    std::vector<Point> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < good; ++i)
        rows.push_back(in_ball(mu, 0.999 * r, rng));

    const Point far_dir = random_unit(dim, rng);
    for (std::size_t i = good; i < m; ++i) {
        Point p = mu;
        switch (style % 4) {
            case 0: {  // one tight far cluster
                for (std::size_t k = 0; k < dim; ++k)
                    p[k] += 1e4 * r * far_dir[k] + 0.01 * r * rng.normal();
                break;
            }
            case 1:  // wide random spread
                p = in_ball(mu, 300.0 * r, rng);
                break;
            case 2: {  // ring just outside the good ball
                Point d = random_unit(dim, rng);
                const double rad = r * rng.uniform(1.05, 3.0);
                for (std::size_t k = 0; k < dim; ++k) p[k] += rad * d[k];
                break;
            }
            default: {  // duplicated opposite-side point
                for (std::size_t k = 0; k < dim; ++k)
                    p[k] -= 50.0 * r * far_dir[k];
                break;
            }
        }
        rows.push_back(std::move(p));
    }
    // interleave so bad candidates are not grouped by index
    std::vector<Point> mixed(rows.size());
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_index(i)]);
    for (std::size_t i = 0; i < order.size(); ++i) mixed[i] = rows[order[i]];
    return {PointSet::from_rows(mixed), mu, r};
}

/// Point at a chosen distance from mu, for the far-query checks.
inline Point at_distance(const Point& mu, double dist, Rng& rng) {
    const Point dir = random_unit(mu.size(), rng);
    Point q = mu;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += dist * dir[k];
    return q;
}

/// Configuration for the truncated-sum checks: `bad` of the m candidates are
/// hostile, the rest lie within gammaR of mu. `bad_at` lists the indices that
/// receive bad candidates (callers control the cluster allocation).
inline EventEConfig make_gamma_good(std::size_t m, std::size_t dim,
                                    double gammaR,
                                    const std::vector<std::size_t>& bad_at,
                                    int style, Rng& rng) {
    const Point mu = random_point(dim, rng, 5.0 * gammaR);
    std::vector<Point> rows(m);
    std::vector<bool> is_bad(m, false);
    for (std::size_t idx : bad_at) is_bad.at(idx) = true;

    const Point far_dir = random_unit(dim, rng);
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_bad[i]) {
            rows[i] = in_ball(mu, 0.999 * gammaR, rng);
            continue;
        }
        Point p = mu;
        switch (style % 3) {
            case 0:  // tight far clump, tries to win the truncated sum
                for (std::size_t k = 0; k < dim; ++k)
                    p[k] += 40.0 * gammaR * far_dir[k] + 0.001 * gammaR * rng.normal();
                break;
            case 1:  // just outside the 2*gammaR reach of good candidates
                p = at_distance(mu, gammaR * rng.uniform(2.2, 6.0), rng);
                break;
            default:
                p = in_ball(mu, 1e3 * gammaR, rng);
                break;
        }
        rows[i] = std::move(p);
    }
    return {PointSet::from_rows(rows), mu, gammaR};
}

}  // namespace testgen
