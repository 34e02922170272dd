#pragma once

#include "polyext/geometry.hpp"

namespace polyext {

inline constexpr double kOrientationEps = 1e-12;

/// Sign of the signed area of triangle (a, b, c): +1 left turn, -1 right
/// turn, 0 when |determinant| < eps.
int orientation(Point a, Point b, Point c, double eps = kOrientationEps);

/// Closed-segment intersection test for [p1,p2] and [p3,p4], including
/// endpoint touches and collinear overlap.
bool segments_intersect(Point p1, Point p2, Point p3, Point p4,
                        double eps = kOrientationEps);

/// True iff no two non-adjacent edges intersect and no two adjacent edges
/// overlap beyond their shared vertex. eps snaps near-zero orientation
/// determinants to collinear.
bool is_simple(const Polygon& p, double eps = kOrientationEps);

/// True iff the vertices, in the given cyclic order, trace a convex polygon:
/// consecutive edge turns share a sign (collinear continuations allowed) and
/// the total turning is one full revolution, so self-wrapping star polygons
/// do not qualify.
bool is_convex_position(const Polygon& p);

}  // namespace polyext
