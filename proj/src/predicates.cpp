#include "polyext/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyext {

namespace {

bool within_box(Point a, Point b, Point q) {
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(Point a, Point b, Point c, double eps) {
    const double det = cross(b - a, c - a);
    if (std::abs(det) < eps) return 0;
    return det > 0.0 ? 1 : -1;
}

bool segments_intersect(Point p1, Point p2, Point p3, Point p4, double eps) {
    const int d1 = orientation(p3, p4, p1, eps);
    const int d2 = orientation(p3, p4, p2, eps);
    const int d3 = orientation(p1, p2, p3, eps);
    const int d4 = orientation(p1, p2, p4, eps);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && within_box(p3, p4, p1)) return true;
    if (d2 == 0 && within_box(p3, p4, p2)) return true;
    if (d3 == 0 && within_box(p1, p2, p3)) return true;
    if (d4 == 0 && within_box(p1, p2, p4)) return true;
    return false;
}

bool is_simple(const Polygon& p, double eps) {
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        const Point a1 = p[i];
        const Point a2 = p.wrapped(i + 1);
        for (int j = i + 1; j < n; ++j) {
            const Point b1 = p[j];
            const Point b2 = p.wrapped(j + 1);
            const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (consecutive) {
                // Shared vertex s; the edges may only meet at s. They overlap
                // beyond it when collinear, pointing the same way, and one far
                // endpoint lies within the other edge's extent.
                const Point s = (j == i + 1) ? a2 : a1;
                const Point u = (j == i + 1) ? a1 : a2;
                const Point w = (j == i + 1) ? b2 : b1;
                if (orientation(s, u, w, eps) == 0 && dot(u - s, w - s) > 0.0 &&
                    (within_box(s, u, w) || within_box(s, w, u)))
                    return false;
            } else {
                if (segments_intersect(a1, a2, b1, b2, eps)) return false;
            }
        }
    }
    return true;
}

bool is_convex_position(const Polygon& p) {
    const int n = p.size();
    // Zero-length edges carry no direction; skip them.
    std::vector<Point> dirs;
    dirs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Point d = p.wrapped(i + 1) - p[i];
        if (d.x != 0.0 || d.y != 0.0) dirs.push_back(d);
    }
    if (dirs.empty()) return true;  // all vertices coincide

    bool pos = false, neg = false;
    double turning = 0.0;
    const size_t m = dirs.size();
    for (size_t i = 0; i < m; ++i) {
        const Point d1 = dirs[i];
        const Point d2 = dirs[(i + 1) % m];
        const double cr = cross(d1, d2);
        const double dt = dot(d1, d2);
        // Collinearity snap relative to edge lengths, so the test is
        // scale-invariant.
        if (std::abs(cr) <= 1e-12 * norm(d1) * norm(d2)) {
            if (dt < 0.0) return false;  // reversal spike
            continue;
        }
        (cr > 0.0 ? pos : neg) = true;
        if (pos && neg) return false;
        turning += std::atan2(cr, dt);
    }
    return std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
}

}  // namespace polyext
