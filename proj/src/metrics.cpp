#include "polyext/metrics.hpp"

#include <algorithm>

namespace polyext {

namespace {

// Compensated accumulator: the acceptance tolerances are absolute 1e-12 on
// sums of a few hundred terms of magnitude ~2, which plain summation does
// not reliably meet.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double perimeter(const Polygon& p) {
    const int n = p.size();
    Kahan total;
    for (int i = 0; i < n; ++i) total.add(dist(p[i], p.wrapped(i + 1)));
    return total.sum;
}

double sum_pairwise_distances(const Polygon& p) {
    const int n = p.size();
    Kahan total;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) total.add(dist(p[i], p[j]));
    return total.sum;
}

double sum_pairwise_squared_distances(const Polygon& p) {
    const int n = p.size();
    Kahan total;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) total.add(dist_sq(p[i], p[j]));
    return total.sum;
}

double longest_edge(const Polygon& p) {
    const int n = p.size();
    double best = 0.0;
    for (int i = 0; i < n; ++i) best = std::max(best, dist(p[i], p.wrapped(i + 1)));
    return best;
}

MetricSummary summarize(const Polygon& p) {
    return {perimeter(p), sum_pairwise_distances(p), sum_pairwise_squared_distances(p),
            longest_edge(p)};
}

Polygon normalize_to_unit_perimeter(const Polygon& p) {
    const double per = perimeter(p);
    if (per == 0.0) throw ZeroPerimeter("cannot normalize a polygon of zero perimeter");
    Point c{0.0, 0.0};
    for (const Point& v : p.vertices()) c = c + v;
    c = (1.0 / p.size()) * c;
    std::vector<Point> out;
    out.reserve(p.vertices().size());
    const double s = 1.0 / per;
    for (const Point& v : p.vertices()) out.push_back(c + s * (v - c));
    return Polygon(std::move(out));
}

Polygon scaled(const Polygon& p, double factor) {
    std::vector<Point> out;
    out.reserve(p.vertices().size());
    for (const Point& v : p.vertices()) out.push_back(factor * v);
    return Polygon(std::move(out));
}

double subpolygon_perimeter(const Polygon& p, std::span<const int> indices) {
    const int k = static_cast<int>(indices.size());
    if (k < 3) throw BadIndexSet("sub-polygon needs at least 3 indices");
    for (int j = 0; j < k; ++j) {
        if (indices[j] < 0 || indices[j] >= p.size())
            throw BadIndexSet("sub-polygon index out of range");
        if (j > 0 && indices[j] <= indices[j - 1])
            throw BadIndexSet("sub-polygon indices must be strictly increasing");
    }
    Kahan total;
    for (int j = 0; j < k; ++j)
        total.add(dist(p[indices[j]], p[indices[(j + 1) % k]]));
    return total.sum;
}

PointPairSquareBound point_pair_square_bound(Point o, Point a, Point b) {
    const double lhs = dist_sq(o, a) + dist_sq(o, b);
    const double ab2 = dist_sq(a, b);
    double y;
    if (ab2 == 0.0) {
        y = dist(o, a);
    } else {
        y = std::abs(cross(b - a, o - a)) / std::sqrt(ab2);
    }
    return {lhs, ab2 / 2.0 + 2.0 * y * y};
}

}  // namespace polyext
