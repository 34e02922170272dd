#include "polyext/constructions.hpp"

#include <cmath>
#include <numbers>

namespace polyext::construct {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Polygon two_cluster(int n, int k, double epsilon) {
    if (n < 3) throw BadN("two_cluster needs n >= 3");
    if (k < 1 || k > n - 1) throw BadSplit("cluster split k must be in [1, n-1]");
    if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");

    // Each cluster sits on an arc of a radius-epsilon circle, bowing away
    // from the other cluster. The angular spread shrinks with n so the
    // normalized distance sums stay within O(epsilon) of their targets even
    // for a few dozen vertices.
    const double spread = std::min(kPi / 3.0, 1.0 / (static_cast<double>(n) * n));
    const int m = n - k;
    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));

    // Left cluster: arc around angle pi of the circle centered at
    // (epsilon, 0), listed top to bottom.
    for (int idx = 0; idx < k; ++idx) {
        const double t = (k == 1) ? 0.5 : static_cast<double>(idx) / (k - 1);
        const double theta = kPi - spread / 2.0 + spread * t;
        verts.push_back({epsilon + epsilon * std::cos(theta), epsilon * std::sin(theta)});
    }
    // Right cluster: arc around angle 0 of the circle centered at
    // (1/2 - epsilon, 0), listed bottom to top, closing the convex cycle.
    for (int idx = 0; idx < m; ++idx) {
        const double t = (m == 1) ? 0.5 : static_cast<double>(idx) / (m - 1);
        const double phi = -spread / 2.0 + spread * t;
        verts.push_back({0.5 - epsilon + epsilon * std::cos(phi), epsilon * std::sin(phi)});
    }
    return Polygon(std::move(verts));
}

Polygon alternating_collinear(int n, double epsilon) {
    if (n < 3) throw BadN("alternating_collinear needs n >= 3");
    if (epsilon < 0.0) throw BadEpsilon("epsilon must be non-negative");

    const double x0 = (n % 2 == 0) ? 1.0 / n : 1.0 / (n - 1);
    const int c_origin = (n + 1) / 2;  // vertices 0, 2, 4, ...
    const int c_far = n / 2;           // vertices 1, 3, 5, ...
    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));
    for (int idx = 0; idx < n; ++idx) {
        const int j = idx / 2;
        if (idx % 2 == 0) {
            verts.push_back({0.0, epsilon * j / c_origin});
        } else {
            verts.push_back({x0, epsilon * j / c_far});
        }
    }
    return Polygon(std::move(verts));
}

Polygon star_thrackle(int n, double radius) {
    if (n < 3 || n % 2 == 0) throw BadN("star_thrackle needs odd n >= 3");
    if (!(radius > 0.0)) throw BadRadius("radius must be positive");
    const int step = (n - 1) / 2;  // coprime with n, so the chain visits every point
    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        const int label = static_cast<int>((static_cast<long long>(t) * step) % n);
        const double angle = 2.0 * kPi * label / n;
        verts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    return Polygon(std::move(verts));
}

Polygon star_thrackle_duplicated(int n, double radius, double epsilon) {
    if (n < 4 || n % 2 != 0) throw BadN("star_thrackle_duplicated needs even n >= 4");
    if (!(radius > 0.0)) throw BadRadius("radius must be positive");
    if (!(epsilon > 0.0) || epsilon >= radius)
        throw BadEpsilon("epsilon must lie in (0, radius)");
    const Polygon base = star_thrackle(n - 1, radius);
    std::vector<Point> verts = base.vertices();
    // Duplicate the first vertex, nudged radially inward so no two vertices
    // coincide.
    const double shrink = 1.0 - epsilon / radius;
    verts.insert(verts.begin() + 1, shrink * verts.front());
    return Polygon(std::move(verts));
}

Polygon simple_extremal_F(int n, double epsilon) {
    if (n < 3 || n % 2 == 0) throw BadN("simple_extremal_F needs odd n >= 3");
    if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");

    // Optimal half-angle: sin(alpha/2) = (-1 + sqrt(1 + 8(n-2)^2)) / (4(n-2)).
    const double m2 = n - 2;
    const double sin_half = (-1.0 + std::sqrt(1.0 + 8.0 * m2 * m2)) / (4.0 * m2);
    const double alpha = 2.0 * std::asin(sin_half);
    const double s = std::sin(alpha);   // half the chord length
    const double y0 = -std::cos(alpha); // chord height, below the center

    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));
    verts.push_back({-s, y0});  // A1: left chord end
    verts.push_back({0.0, 1.0});  // A2: top of the circle
    verts.push_back({s, y0});   // A3: right chord end
    if (n == 3) return Polygon(std::move(verts));

    // The remaining n-2 edges sweep nearly the full chord. Left turn
    // vertices sit above the chord at descending heights, right turn
    // vertices below at descending depths; that stacking order keeps every
    // pair of non-adjacent edges apart by Theta(epsilon / n).
    const double e = std::min(epsilon, 0.5);
    const int m = n - 3;
    const int half = m / 2;
    const double inset = e * s / 4.0;
    const double band = e / 8.0;
    const double h = band / half;
    for (int t = 1; t <= half; ++t) {
        verts.push_back({-s + inset, y0 + (half - t + 1) * h});
        verts.push_back({s - inset, y0 - t * h});
    }
    return Polygon(std::move(verts));
}

Polygon near_diameter_zigzag(int n, double epsilon) {
    if (n % 2 != 0) throw BadN("near_diameter_zigzag needs even n");
    if (n < 4) throw BadN("near_diameter_zigzag needs n >= 4");
    if (!(epsilon > 0.0)) throw BadEpsilon("epsilon must be positive");

    // Boundary of a thin strip folded m = n/2 times along the horizontal
    // diameter. Outer turn vertices and both caps lie on the circle; inner
    // turns are inset by iota. The band unit scales with sqrt(epsilon) so
    // the near-degenerate orientation determinants stay ~epsilon^1.5 while
    // the edge-length losses stay O(epsilon).
    const double e = std::min(epsilon, 0.25);
    const int m = n / 2;
    const double h = std::sqrt(e) / (2.0 * m);
    const double iota = m * e;

    const auto on_circle = [](double x_sign, double y) -> Point {
        return {x_sign * std::sqrt(1.0 - y * y), y};
    };
    // Turn t joins fold t and fold t+1 at height (2t+1)h; right side for
    // even t. The up-chain takes the outer turn vertex on the right and the
    // inner one on the left, so it stays east of the down-chain everywhere.
    const auto turn_outer = [&](int t) -> Point {
        return on_circle(t % 2 == 0 ? 1.0 : -1.0, (2.0 * t + 1.0) * h);
    };
    const auto turn_inner = [&](int t) -> Point {
        const Point o = turn_outer(t);
        return {o.x - (t % 2 == 0 ? iota : -iota), o.y};
    };

    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));
    verts.push_back({-1.0, 0.0});  // bottom cap
    for (int t = 0; t <= m - 2; ++t)
        verts.push_back(t % 2 == 0 ? turn_outer(t) : turn_inner(t));
    verts.push_back(on_circle(m % 2 == 0 ? -1.0 : 1.0, 2.0 * (m - 1) * h));  // top cap
    for (int t = m - 2; t >= 0; --t)
        verts.push_back(t % 2 == 0 ? turn_inner(t) : turn_outer(t));
    return Polygon(std::move(verts));
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::TwoCluster: return "two_cluster";
        case Kind::AlternatingCollinear: return "alternating_collinear";
        case Kind::StarThrackle: return "star_thrackle";
        case Kind::SimpleExtremalF: return "simple_extremal_f";
        case Kind::NearDiameterZigzag: return "near_diameter_zigzag";
    }
    return "unknown";
}

std::optional<Kind> kind_from_name(const std::string& name) {
    for (Kind k : {Kind::TwoCluster, Kind::AlternatingCollinear, Kind::StarThrackle,
                   Kind::SimpleExtremalF, Kind::NearDiameterZigzag})
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

Polygon build(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case Kind::TwoCluster:
            return two_cluster(spec.n, spec.cluster_split.value_or(spec.n / 2),
                               spec.epsilon);
        case Kind::AlternatingCollinear:
            return alternating_collinear(spec.n, spec.epsilon);
        case Kind::StarThrackle:
            return star_thrackle(spec.n, spec.radius);
        case Kind::SimpleExtremalF:
            return simple_extremal_F(spec.n, spec.epsilon);
        case Kind::NearDiameterZigzag:
            return near_diameter_zigzag(spec.n, spec.epsilon);
    }
    throw Error("unknown construction kind");
}

}  // namespace polyext::construct
