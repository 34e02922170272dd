#pragma once

#include <cmath>
#include <vector>

#include "polyext/errors.hpp"

namespace polyext {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist_sq(Point a, Point b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Closed polygonal chain. Vertices are interpreted cyclically; edge i joins
/// vertex i and vertex (i+1) mod n. Self-crossings and coincident consecutive
/// vertices are permitted; only finiteness and n >= 3 are enforced.
class Polygon {
  public:
    explicit Polygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
        if (verts_.size() < 3)
            throw TooFewVertices("polygon needs at least 3 vertices, got " +
                                 std::to_string(verts_.size()));
        for (const Point& p : verts_)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw NonFiniteCoordinate("polygon vertex coordinates must be finite");
    }

    int size() const { return static_cast<int>(verts_.size()); }
    const Point& operator[](int i) const { return verts_[static_cast<size_t>(i)]; }
    // Cyclic access, valid for i in [0, 2n).
    const Point& wrapped(int i) const {
        const int n = size();
        return verts_[static_cast<size_t>(i >= n ? i - n : i)];
    }
    const std::vector<Point>& vertices() const { return verts_; }

    bool operator==(const Polygon& other) const { return verts_ == other.verts_; }

  private:
    std::vector<Point> verts_;
};

}  // namespace polyext
