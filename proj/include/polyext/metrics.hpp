#pragma once

#include <span>

#include "polyext/geometry.hpp"

namespace polyext {

struct MetricSummary {
    double perimeter = 0.0;
    double sum_distances = 0.0;
    double sum_squared_distances = 0.0;
    double longest_edge = 0.0;
};

/// Sum of cyclic edge lengths.
double perimeter(const Polygon& p);

/// Sum of |AiAj| over all unordered vertex pairs i < j.
double sum_pairwise_distances(const Polygon& p);

/// Sum of |AiAj|^2 over all unordered vertex pairs i < j.
double sum_pairwise_squared_distances(const Polygon& p);

double longest_edge(const Polygon& p);

MetricSummary summarize(const Polygon& p);

/// Scales the polygon about its vertex centroid by 1/perimeter.
/// Throws ZeroPerimeter when the perimeter vanishes.
Polygon normalize_to_unit_perimeter(const Polygon& p);

/// Scales all coordinates about the origin. Test/verification helper.
Polygon scaled(const Polygon& p, double factor);

/// Perimeter of the sub-polygon selected by a strictly increasing index
/// subset (0-based) of size >= 3. Never exceeds perimeter(p).
double subpolygon_perimeter(const Polygon& p, std::span<const int> indices);

struct PointPairSquareBound {
    double lhs = 0.0;  // |oa|^2 + |ob|^2
    double rhs = 0.0;  // |ab|^2 / 2 + 2 y^2, y = distance from o to line(a, b)
};

/// Evaluates both sides of the two-point squared-distance inequality
/// lhs >= rhs. For a == b the line degenerates and y is the distance to
/// that point.
PointPairSquareBound point_pair_square_bound(Point o, Point a, Point b);

}  // namespace polyext
